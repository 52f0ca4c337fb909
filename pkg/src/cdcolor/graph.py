"""Graph representation, parsing and structural predicates.

A :class:`Graph` stores one adjacency bitmask per vertex: bit ``v`` of
``adj[u]`` is set exactly when ``(u, v)`` is an edge.  Vertices are
0-indexed internally; parsed inputs keep their original names in
``labels`` for output.  Graphs are immutable after construction and all
predicates here are pure functions, so concurrent readers are safe.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .bits import bit_list, iter_bits, lowest_bit, mask_of
from .errors import NotChordalError, ParseError


class Graph:
    """Simple undirected graph over vertices ``0..n-1``.

    Invariants enforced at construction: adjacency is symmetric, no
    vertex is adjacent to itself, and the bitmask representation rules
    out multi-edges.  Isolated vertices are legal everywhere.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, adj: Sequence[int], labels: Optional[Sequence] = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adj) != n:
            raise ValueError("adjacency list length must equal vertex count")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency row {u} references vertices >= {n}")
            if (row >> u) & 1:
                raise ValueError(f"vertex {u} has a self-loop")
        for u in range(n):
            for v in iter_bits(adj[u]):
                if not (adj[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length must equal vertex count")
            if len(set(labels)) != n:
                raise ValueError("labels must be unique")
        self.n = n
        self.adj = tuple(adj)
        self.labels = labels

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Tuple[int, int]], labels: Optional[Sequence] = None
    ) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, u: int) -> int:
        return self.adj[u]

    def closed(self, u: int) -> int:
        """Closed neighborhood mask of ``u`` (neighbors plus ``u``)."""
        return self.adj[u] | (1 << u)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def label(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def label_list(self, mask_or_vertices) -> list:
        if isinstance(mask_or_vertices, int):
            mask_or_vertices = bit_list(mask_or_vertices)
        return [self.label(v) for v in mask_or_vertices]

    def induced(self, mask: int) -> Tuple["Graph", List[int]]:
        """Induced subgraph on ``mask``; returns it with the old vertex ids."""
        ids = bit_list(mask)
        pos = {old: new for new, old in enumerate(ids)}
        adj = [0] * len(ids)
        for new, old in enumerate(ids):
            for w in iter_bits(self.adj[old] & mask):
                adj[new] |= 1 << pos[w]
        labels = tuple(self.label(v) for v in ids) if self.labels is not None else None
        return Graph(len(ids), adj, labels), ids

    def without(self, mask: int) -> Tuple["Graph", List[int]]:
        """Induced subgraph obtained by deleting the vertices in ``mask``."""
        return self.induced(self.full_mask & ~mask)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- parsing / serialization -------------------------------------------------


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format: ``p edge n m`` header, ``e u v`` lines."""
    n = None
    edges: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                n, _m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"malformed edge {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex index out of range in {line!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    return Graph.from_edges(n, edges, labels=tuple(range(1, n + 1)))


def parse_edgelist(text: str) -> Graph:
    """Parse one ``u v`` pair per line; vertices are positive integers."""
    pairs: List[Tuple[int, int, int]] = []
    hi = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v' pair, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 1 or v < 1:
            raise ParseError(f"vertex names must be positive in {line!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        pairs.append((u, v, lineno))
        hi = max(hi, u, v)
    if not pairs:
        raise ParseError("no edges found")
    return Graph.from_edges(
        hi, [(u - 1, v - 1) for u, v, _ in pairs], labels=tuple(range(1, hi + 1))
    )


def detect_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        return "dimacs" if line.split()[0] == "p" else "edgelist"
    return "dimacs"


def parse_graph(text, fmt: str) -> Graph:
    """Parse ``text`` (str or bytes) in the given format (dimacs/edgelist)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown format {fmt!r}")


def to_dimacs(g: Graph, comments: Sequence[str] = ()) -> str:
    """Canonical DIMACS serialization (1-indexed, edges sorted)."""
    lines = [f"c {c}" for c in comments]
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


# -- connectivity ------------------------------------------------------------


def components_within(g: Graph, active: int) -> List[int]:
    """Connected components of ``g`` restricted to the ``active`` mask."""
    out = []
    rest = active
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adj[v]
            grow &= active & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph) -> List[int]:
    """Vertex-set masks of the connected components, by lowest vertex."""
    return components_within(g, g.full_mask)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


# -- cycles and colorings ----------------------------------------------------


def girth(g: Graph):
    """Length of a shortest cycle, or ``float('inf')`` for forests.

    One BFS per start vertex; a non-tree edge seen at depths ``d(u)``
    and ``d(w)`` witnesses a closed walk of length ``d(u) + d(w) + 1``,
    and the minimum over all starts is exact.
    """
    best = float("inf")
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = [s]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            if dist[u] * 2 >= best:
                break
            for w in iter_bits(g.adj[u]):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def bipartition_within(g: Graph, active: int) -> Optional[Tuple[int, int]]:
    """Two-coloring of ``g`` restricted to ``active``, or None if odd cycle.

    Deterministic orientation: the lowest-index vertex of every
    component goes on side A.
    """
    side_a = side_b = 0
    seen = 0
    rest = active
    while rest:
        s = lowest_bit(rest)
        seen |= 1 << s
        side_a |= 1 << s
        frontier = 1 << s
        cur_side = 0  # 0: frontier is on side A
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adj[v]
            grow &= active & ~seen
            # conflicts: a frontier vertex adjacent to its own side
            for v in iter_bits(frontier):
                same = side_a if cur_side == 0 else side_b
                if g.adj[v] & same & active:
                    return None
            seen |= grow
            if cur_side == 0:
                side_b |= grow
            else:
                side_a |= grow
            frontier = grow
            cur_side ^= 1
        rest = active & ~seen
    return side_a, side_b


def bipartition(g: Graph) -> Optional[Tuple[int, int]]:
    """Bipartition masks ``(A, B)`` if ``g`` is bipartite, else None."""
    return bipartition_within(g, g.full_mask)


def find_triangle(g: Graph) -> Optional[Tuple[int, int, int]]:
    """Lexicographically first triangle ``(u, v, w)``, ``u < v < w``, or None."""
    for u in range(g.n):
        for dv in iter_bits(g.adj[u] >> (u + 1)):
            v = u + 1 + dv
            # a sorted triangle is always seen from its lowest edge
            higher = g.adj[u] & g.adj[v] & ~((1 << (v + 1)) - 1)
            if higher:
                return (u, v, lowest_bit(higher))
    return None


# -- split graphs ------------------------------------------------------------


def split_partition(g: Graph) -> Optional[Tuple[int, int]]:
    """Partition into (clique, independent set) masks, or None.

    Uses the degree-sequence characterization of split graphs, then
    greedily moves independent vertices that are complete to the clique
    so the clique side is a maximum clique.
    """
    if g.n == 0:
        return (0, 0)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = max(i + 1 for i in range(g.n) if deg[i] >= i)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    clique = mask_of(order[:m])
    indep = g.full_mask & ~clique
    for u in iter_bits(clique):
        if g.adj[u] & clique != clique & ~(1 << u):
            return None
    for u in iter_bits(indep):
        if g.adj[u] & indep:
            return None
    # absorb independent vertices complete to the clique (keeps it maximum)
    while True:
        for v in iter_bits(indep):
            if g.adj[v] & clique == clique:
                clique |= 1 << v
                indep &= ~(1 << v)
                break
        else:
            break
    return clique, indep


# -- chordal graphs ----------------------------------------------------------


def _mcs_elimination_order(g: Graph) -> List[int]:
    """Maximum cardinality search; returns a candidate elimination order."""
    weight = [0] * g.n
    numbered = 0
    visit: List[int] = []
    for _ in range(g.n):
        best_v, best_w = -1, -1
        for v in range(g.n):
            if not (numbered >> v) & 1 and weight[v] > best_w:
                best_v, best_w = v, weight[v]
        numbered |= 1 << best_v
        visit.append(best_v)
        for w in iter_bits(g.adj[best_v]):
            if not (numbered >> w) & 1:
                weight[w] += 1
    visit.reverse()
    return visit


def _chordless_cycle_witness(g: Graph) -> Tuple[int, ...]:
    """Some chordless cycle of length >= 4 in a non-chordal graph."""
    for v in range(g.n):
        nb = bit_list(g.adj[v])
        for i, u in enumerate(nb):
            for w in nb[i + 1 :]:
                if g.has_edge(u, w):
                    continue
                allowed = g.full_mask & ~(g.closed(v) & ~((1 << u) | (1 << w)))
                path = _shortest_path_within(g, u, w, allowed)
                if path is not None:
                    return (v, *path)
    raise AssertionError("no chordless cycle found in a non-chordal graph")


def _shortest_path_within(g: Graph, src: int, dst: int, allowed: int):
    if not ((allowed >> src) & 1 and (allowed >> dst) & 1):
        return None
    prev = {src: -1}
    queue = [src]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        if u == dst:
            path = []
            while u != -1:
                path.append(u)
                u = prev[u]
            return tuple(reversed(path))
        for w in iter_bits(g.adj[u] & allowed):
            if w not in prev:
                prev[w] = u
                queue.append(w)
    return None


def clique_number_chordal(g: Graph) -> int:
    """Clique number of a chordal graph via a perfect elimination order.

    Raises :class:`NotChordalError` with a chordless-cycle witness when
    the input is not chordal.
    """
    order = _mcs_elimination_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    later = [0] * g.n
    for v in range(g.n):
        for w in iter_bits(g.adj[v]):
            if pos[w] > pos[v]:
                later[v] |= 1 << w
    best = 1 if g.n else 0
    for v in order:
        nb = later[v]
        if not nb:
            continue
        best = max(best, 1 + nb.bit_count())
        u = min(iter_bits(nb), key=lambda w: pos[w])
        rest = nb & ~(1 << u)
        if rest & ~g.adj[u]:
            raise NotChordalError(_chordless_cycle_witness(g))
    return best
