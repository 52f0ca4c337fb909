"""Total dominating sets and the girth-5 route to cd-coloring.

On triangle-free graphs a minimum total dominating set has the same
size as an optimal cd-coloring, and the coloring can be read off the
set.  Girth 5 additionally makes neighborhoods independent and pairwise
near-disjoint, which powers the cubic kernel and the bounded search
below.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .bits import bit_list, iter_bits, lowest_bit, mask_of
from .coloring import CdColoring, make_coloring
from .errors import CapacityError, PreconditionError
from .graph import Graph, connected_components, find_triangle, girth, is_connected

BRUTE_N_CAP = 20
BRUTE_K_CAP = 6


def kernel_size_bound(k: int) -> int:
    """Documented kernel guarantee: at most ``k**3 + 2k**2 + 2k`` vertices."""
    return k**3 + 2 * k**2 + 2 * k


@dataclass(frozen=True)
class TdsCertificate:
    """A total dominating set as a mask plus its size."""

    mask: int
    size: int

    def vertices(self) -> List[int]:
        return bit_list(self.mask)


@dataclass(frozen=True)
class KernelOutcome:
    """Result of kernelization: an immediate NO or a reduced instance.

    ``forced`` lists original vertices (the high-degree set) that belong
    to every solution of size at most ``k``; ``back_map`` sends kernel
    vertex indices to original ones.
    """

    verdict: str  # "NO" or "REDUCED"
    kernel: Optional[Graph] = None
    back_map: Optional[Tuple[int, ...]] = None
    forced: int = 0
    reason: Optional[str] = None


def is_total_dominating(g: Graph, mask: int) -> bool:
    """True when every vertex has a neighbor inside ``mask``."""
    return all(g.adj[v] & mask for v in range(g.n))


def _require_girth5(g: Graph, who: str) -> None:
    gg = girth(g)
    if gg < 5:
        raise PreconditionError(
            f"{who} requires girth >= 5 (got {gg}): open neighborhoods must be "
            "independent sets with pairwise intersections of size at most 1"
        )


def tds_kernelize(g: Graph, k: int) -> KernelOutcome:
    """Cubic kernel for total domination on girth >= 5 graphs.

    High-degree vertices (degree > k) are forced into any solution, the
    remainder's size is bounded, and a vertex of ``J*`` whose
    high-degree neighborhood is covered by a surviving peer is deleted.
    """
    if k < 1:
        raise PreconditionError("parameter k must be at least 1")
    _require_girth5(g, "tds kernelization")
    full = g.full_mask
    h_mask = mask_of(v for v in range(g.n) if g.degree(v) >= k + 1)
    if h_mask.bit_count() > k:
        return KernelOutcome("NO", reason=f"more than k={k} vertices of degree > k")
    j_mask = 0
    for h in iter_bits(h_mask):
        j_mask |= g.adj[h]
    j_mask &= ~h_mask
    r_mask = full & ~(h_mask | j_mask)
    if r_mask.bit_count() > k * k:
        return KernelOutcome("NO", reason=f"undominatable remainder: |R| > k^2")
    nr_mask = 0
    for v in iter_bits(r_mask):
        nr_mask |= g.adj[v]
    if (j_mask & nr_mask).bit_count() > k**3:
        return KernelOutcome("NO", reason="|J ∩ N(R)| exceeds k^3")
    j_star = bit_list(j_mask & ~nr_mask)
    deleted = 0
    for u in j_star:
        hu = g.adj[u] & h_mask
        for v in j_star:
            if v == u or (deleted >> v) & 1:
                continue
            if not hu & ~(g.adj[v] & h_mask):
                deleted |= 1 << u
                break
    keep = full & ~deleted
    kernel, ids = g.induced(keep)
    assert kernel.n <= kernel_size_bound(k)
    return KernelOutcome(
        "REDUCED", kernel=kernel, back_map=tuple(ids), forced=h_mask
    )


def _search_min_tds(g: Graph, k: int, forced: int) -> Optional[int]:
    """Minimum total dominating set of size <= k containing ``forced``.

    Branches on the lowest-index undominated vertex, trying each of its
    neighbors in increasing order; the first minimum found is kept.
    """
    full = g.full_mask
    base_dom = 0
    for v in iter_bits(forced):
        base_dom |= g.adj[v]
    best_size = k + 1
    best_mask: Optional[int] = None

    def rec(sol: int, dom: int, size: int) -> None:
        nonlocal best_size, best_mask
        if size >= best_size:
            return
        undom = full & ~dom
        if not undom:
            best_size, best_mask = size, sol
            return
        u = lowest_bit(undom)
        if not g.adj[u]:
            return
        for v in iter_bits(g.adj[u]):
            rec(sol | (1 << v), dom | g.adj[v], size + 1)

    rec(forced, base_dom, forced.bit_count())
    return best_mask


def tds_solve(g: Graph, k: int) -> Optional[TdsCertificate]:
    """Minimum total dominating set of size <= k, or None.

    Kernelize, commit the forced set, then run a bounded search tree on
    the kernel.  Disconnected graphs are solved per component and the
    sizes added; an isolated vertex can never be dominated.
    """
    _require_girth5(g, "tds solving")
    if k < 1:
        return None
    if any(not g.adj[v] for v in range(g.n)):
        return None
    total_mask = 0
    total_size = 0
    for comp in connected_components(g):
        sub, ids = g.induced(comp)
        outcome = tds_kernelize(sub, k)
        if outcome.verdict == "NO":
            return None
        kernel = outcome.kernel
        back = outcome.back_map
        to_kernel = {old: new for new, old in enumerate(back)}
        forced_kernel = mask_of(to_kernel[v] for v in iter_bits(outcome.forced))
        found = _search_min_tds(kernel, k - total_size, forced_kernel)
        if found is None:
            return None
        comp_mask = mask_of(ids[back[v]] for v in iter_bits(found))
        total_mask |= comp_mask
        total_size += found.bit_count()
        if total_size > k:
            return None
    assert is_total_dominating(g, total_mask)
    return TdsCertificate(total_mask, total_size)


def tds_bruteforce(g: Graph, k: int) -> Optional[TdsCertificate]:
    """Exhaustive minimum total dominating set of size <= k (small inputs)."""
    if g.n > BRUTE_N_CAP or k > BRUTE_K_CAP:
        raise CapacityError(
            f"brute-force caps are n <= {BRUTE_N_CAP}, k <= {BRUTE_K_CAP}"
        )
    if any(not g.adj[v] for v in range(g.n)):
        return None
    for size in range(1, min(k, g.n) + 1):
        for combo in itertools.combinations(range(g.n), size):
            mask = mask_of(combo)
            if is_total_dominating(g, mask):
                return TdsCertificate(mask, size)
    return None


def cd_coloring_from_tds(g: Graph, cert: TdsCertificate) -> CdColoring:
    """Coloring whose classes are the fresh neighborhoods of the set.

    Processing the set's vertices in increasing order, class ``i`` is
    what ``N(v_i)`` adds beyond the earlier classes.  Triangle-freeness
    keeps every neighborhood independent; empty classes are dropped.
    """
    tri = find_triangle(g)
    if tri is not None:
        raise PreconditionError(
            f"construction needs a triangle-free graph; found triangle {tri}"
        )
    if not is_connected(g):
        raise PreconditionError("construction needs a connected graph")
    if not is_total_dominating(g, cert.mask):
        raise PreconditionError("given set is not total dominating")
    covered = 0
    class_masks = []
    dominators = []
    for v in bit_list(cert.mask):
        fresh = g.adj[v] & ~covered
        class_masks.append(fresh)
        dominators.append(v)
        covered |= fresh
    return make_coloring(class_masks, dominators)


def cd_chromatic_girth5(g: Graph) -> Tuple[int, CdColoring]:
    """cd-chromatic number of a connected girth >= 5 graph.

    Equals the minimum total dominating set size; the first parameter
    value the bounded search accepts is the answer.  A lone vertex is
    its own class.
    """
    _require_girth5(g, "girth-5 solver")
    if not is_connected(g):
        raise PreconditionError("girth-5 solver needs a connected graph")
    if g.n == 1:
        return 1, CdColoring(((0,),), (0,))
    for k in range(1, g.n + 1):
        cert = tds_solve(g, k)
        if cert is not None:
            assert cert.size == k
            return cert.size, cd_coloring_from_tds(g, cert)
    raise AssertionError("connected graph with >= 2 vertices has a TDS")
