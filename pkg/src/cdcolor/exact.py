"""Exact cd-chromatic number via set-family polynomial powers.

The engine represents a family of vertex subsets as one ``2**n``-bit
integer (:class:`CoefficientTable`): bit ``d`` is set when the subset
with characteristic value ``d`` belongs to the family.  The product of
two tables keeps exactly the disjoint unions of their members, and the
smallest power of the color-class family that contains the full vertex
set is the cd-chromatic number.

The product is computed per Hamming-weight layer: multiplying the
weight-``i`` slice of one table by a single monomial ``z**s`` is a left
shift by ``s``, and masking the result to weight ``i + j`` keeps exactly
the carry-free sums, which are the unions of disjoint pairs.  Iterating
the monomials of the lighter slice keeps each layer product linear in
the table size.

:func:`cd_chromatic_bruteforce` is the independent validation oracle: a
direct search over vertex partitions that never touches the tables.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .bits import bit_list, iter_bits, lowest_bit, weight_masks
from .coloring import CdColoring, make_coloring, merge_colorings
from .errors import CapacityError, PreconditionError
from .graph import Graph, connected_components

DEFAULT_EXACT_CAP = 26

BRUTEFORCE_CAP = 9


class CoefficientTable:
    """Boolean table over the subsets of an ``n``-element universe."""

    __slots__ = ("n", "bits", "_slices", "_members")

    def __init__(self, n: int, bits: int = 0):
        if n < 0:
            raise ValueError("universe size must be non-negative")
        if bits >> (1 << n):
            raise ValueError("table has entries beyond 2**n")
        self.n = n
        self.bits = bits
        self._slices: Optional[List[int]] = None
        self._members: Dict[int, List[int]] = {}

    def contains(self, subset_mask: int) -> bool:
        return bool((self.bits >> subset_mask) & 1)

    def member_count(self) -> int:
        return self.bits.bit_count()

    def members(self) -> List[int]:
        """All present subset masks, ascending."""
        return bit_list(self.bits)

    def slice(self, weight: int) -> int:
        """Bits of the table restricted to subsets of the given size."""
        if self._slices is None:
            masks = weight_masks(self.n)
            self._slices = [self.bits & masks[i] for i in range(self.n + 1)]
        return self._slices[weight]

    def slice_count(self, weight: int) -> int:
        return self.slice(weight).bit_count()

    def slice_members(self, weight: int) -> List[int]:
        if weight not in self._members:
            self._members[weight] = bit_list(self.slice(weight))
        return self._members[weight]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoefficientTable)
            and self.n == other.n
            and self.bits == other.bits
        )

    def __repr__(self) -> str:
        return f"CoefficientTable(n={self.n}, members={self.member_count()})"


def build_color_class_family(g: Graph, cap: int = DEFAULT_EXACT_CAP) -> CoefficientTable:
    """Table of all candidate color classes of ``g``.

    A nonempty set qualifies when it is independent and fits inside the
    closed neighborhood of some vertex.  Built per vertex ``y`` by
    growing the independent subsets of ``N[y]`` one element at a time;
    duplicates collapse in the table.
    """
    if g.n > cap:
        raise CapacityError(
            f"exact solver capacity is {cap} vertices, got {g.n}; raise the cap"
        )
    table = 0
    for y in range(g.n):
        sets = [0]
        for v in iter_bits(g.closed(y)):
            av = g.adj[v]
            sets += [s | (1 << v) for s in sets if not (av & s)]
        for s in sets:
            if s:
                table |= 1 << s
    return CoefficientTable(g.n, table)


def star_product(p: CoefficientTable, r: CoefficientTable) -> CoefficientTable:
    """Table of all unions of a ``p``-member and a disjoint ``r``-member.

    Layer by layer: for weights ``(i, j)`` the product accumulates, for
    every member ``s`` of the lighter slice, the other slice shifted by
    ``s``; keeping only weight ``i + j`` discards every overlapping pair
    because a carry always lowers the popcount of a sum.
    """
    if p.n != r.n:
        raise ValueError(f"universe size mismatch: {p.n} != {r.n}")
    n = p.n
    masks = weight_masks(n)
    out = 0
    for i in range(n + 1):
        ci = p.slice_count(i)
        if not ci:
            continue
        for j in range(n + 1 - i):
            cj = r.slice_count(j)
            if not cj:
                continue
            target = masks[i + j]
            acc = 0
            if ci <= cj:
                other = r.slice(j)
                for s in p.slice_members(i):
                    acc |= other << s
            else:
                other = p.slice(i)
                for s in r.slice_members(j):
                    acc |= other << s
            out |= acc & target
    return CoefficientTable(n, out)


def star_power(p: CoefficientTable, ell: int) -> CoefficientTable:
    """``ell``-fold product of ``p`` with itself; ``ell = 1`` is ``p``."""
    if ell < 1:
        raise ValueError("power must be at least 1")
    cur = p
    for _ in range(ell - 1):
        cur = star_product(cur, p)
    return cur


def _dominator_of(g: Graph, class_mask: int) -> int:
    for y in range(g.n):
        if not class_mask & ~g.closed(y):
            return y
    raise AssertionError("class has no dominator")


def _peel_witness(
    g: Graph, family: CoefficientTable, powers: List[CoefficientTable]
) -> CdColoring:
    """Recover one optimal partition into family sets from the powers.

    Walking down from the top power, peel the lexicographically
    smallest family member whose removal stays reachable one power
    lower.  Deterministic by construction.
    """
    want = g.full_mask
    class_masks: List[int] = []
    for level in range(len(powers) - 1, 0, -1):
        lower = powers[level - 1]
        for s in family.members():
            if s & ~want:
                continue
            if lower.contains(want ^ s):
                class_masks.append(s)
                want ^= s
                break
        else:
            raise AssertionError("witness peel failed")
    if not family.contains(want):
        raise AssertionError("witness peel left a non-member")
    class_masks.append(want)
    return make_coloring(class_masks, [_dominator_of(g, c) for c in class_masks])


def _exact_component(g: Graph, cap: int) -> Tuple[int, CdColoring]:
    family = build_color_class_family(g, cap=cap)
    powers = [family]
    full = g.full_mask
    while not powers[-1].contains(full):
        if len(powers) >= g.n:
            raise AssertionError("no family partition covers the component")
        powers.append(star_product(powers[-1], family))
    q = len(powers)
    return q, _peel_witness(g, family, powers)


def cd_chromatic_exact(
    g: Graph, cap: int = DEFAULT_EXACT_CAP
) -> Tuple[int, CdColoring]:
    """Exact cd-chromatic number with a certifying coloring.

    Solved independently per connected component (the answers add) and
    capped at ``cap`` vertices per component; each table costs ``2**n``
    bits of memory.
    """
    if g.n == 0:
        raise PreconditionError("graph must have at least one vertex")
    total = 0
    parts: List[CdColoring] = []
    for comp in connected_components(g):
        sub, ids = g.induced(comp)
        q, coloring = _exact_component(sub, cap)
        total += q
        parts.append(coloring.relabeled(ids))
    return total, merge_colorings(parts)


# -- brute-force oracle -------------------------------------------------------


def _bruteforce_component(g: Graph) -> Tuple[int, CdColoring]:
    """Minimum partition into dominated independent sets, by direct search.

    Vertices are assigned in index order to an existing block or a fresh
    one; a block tracks the mask of vertices whose closed neighborhood
    still covers it, so dead branches prune early.
    """
    n = g.n
    closed = [g.closed(v) for v in range(n)]
    best_count = n + 1
    best: List[Tuple[int, int]] = []
    blocks: List[Tuple[int, int]] = []  # (member mask, candidate dominator mask)

    def assign(v: int) -> None:
        nonlocal best_count, best
        if len(blocks) >= best_count:
            return
        if v == n:
            best_count = len(blocks)
            best = list(blocks)
            return
        bit = 1 << v
        for idx, (members, cands) in enumerate(blocks):
            if g.adj[v] & members:
                continue
            new_cands = cands & closed[v]
            if not new_cands:
                continue
            blocks[idx] = (members | bit, new_cands)
            assign(v + 1)
            blocks[idx] = (members, cands)
        blocks.append((bit, closed[v]))
        assign(v + 1)
        blocks.pop()

    assign(0)
    class_masks = [members for members, _ in best]
    dominators = [lowest_bit(cands) for _, cands in best]
    return best_count, make_coloring(class_masks, dominators)


def cd_chromatic_bruteforce(g: Graph, cap: int = BRUTEFORCE_CAP) -> Tuple[int, CdColoring]:
    """Independent oracle for the cd-chromatic number (small graphs only)."""
    if g.n > cap:
        raise CapacityError(f"brute-force oracle capacity is {cap} vertices, got {g.n}")
    if g.n == 0:
        return 0, CdColoring((), ())
    total = 0
    parts: List[CdColoring] = []
    for comp in connected_components(g):
        sub, ids = g.induced(comp)
        q, coloring = _bruteforce_component(sub)
        total += q
        parts.append(coloring.relabeled(ids))
    return total, merge_colorings(parts)
