"""Class-domination coloring certificates and their validation.

A cd-coloring is a proper coloring in which every color class fits
inside the closed neighborhood of some vertex, its dominator.  The
closed-neighborhood convention makes a lone vertex 1-colorable; on
connected graphs with at least two vertices it coincides with the
open-neighborhood reading.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .bits import iter_bits, mask_of
from .graph import Graph


@dataclass(frozen=True)
class CdColoring:
    """Color classes (tuples of vertices) plus one dominator per class."""

    classes: Tuple[Tuple[int, ...], ...]
    dominators: Tuple[int, ...]

    @property
    def q(self) -> int:
        return len(self.classes)

    def color_of(self) -> Dict[int, int]:
        """Vertex to 0-based color index map."""
        out: Dict[int, int] = {}
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out

    def vertices_mask(self) -> int:
        return mask_of(v for cls in self.classes for v in cls)

    def relabeled(self, mapping: Sequence[int]) -> "CdColoring":
        """Apply a vertex renaming (index -> mapping[index])."""
        return CdColoring(
            tuple(tuple(mapping[v] for v in cls) for cls in self.classes),
            tuple(mapping[d] for d in self.dominators),
        )

    def to_payload(self, g: Graph) -> dict:
        """JSON-shaped certificate using the graph's vertex labels."""
        return {
            "q": self.q,
            "classes": [[g.label(v) for v in cls] for cls in self.classes],
            "dominators": [g.label(d) for d in self.dominators],
        }

    @staticmethod
    def from_payload(payload: dict, g: Graph) -> "CdColoring":
        label_to_index = {g.label(v): v for v in range(g.n)}
        try:
            classes = tuple(
                tuple(label_to_index[x] for x in cls) for cls in payload["classes"]
            )
            dominators = tuple(label_to_index[x] for x in payload["dominators"])
        except KeyError as exc:
            raise ValueError(f"certificate references unknown vertex {exc}") from None
        return CdColoring(classes, dominators)


def make_coloring(class_masks: Sequence[int], dominators: Sequence[int]) -> CdColoring:
    """Build a coloring from vertex-set masks, dropping empty classes."""
    classes = []
    doms = []
    for mask, d in zip(class_masks, dominators):
        if mask:
            classes.append(tuple(iter_bits(mask)))
            doms.append(d)
    return CdColoring(tuple(classes), tuple(doms))


def merge_colorings(parts: Sequence[CdColoring]) -> CdColoring:
    """Concatenate colorings of vertex-disjoint subgraphs."""
    classes: List[Tuple[int, ...]] = []
    doms: List[int] = []
    for c in parts:
        classes.extend(c.classes)
        doms.extend(c.dominators)
    return CdColoring(tuple(classes), tuple(doms))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problem: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def validate_cd_coloring(g: Graph, coloring: CdColoring) -> ValidationReport:
    """Check a coloring against all cd-coloring requirements.

    Valid means: the classes partition the whole vertex set, every class
    is nonempty and independent, and class ``i`` lies inside the closed
    neighborhood of ``dominators[i]``.  The report names the first
    offending edge or undominated class on failure.
    """
    if len(coloring.classes) != len(coloring.dominators):
        return ValidationReport(False, "class/dominator count mismatch")
    seen = 0
    for i, cls in enumerate(coloring.classes):
        if not cls:
            return ValidationReport(False, f"class {i} is empty")
        for v in cls:
            if not (0 <= v < g.n):
                return ValidationReport(False, f"class {i} references vertex {v}")
            if (seen >> v) & 1:
                return ValidationReport(False, f"vertex {v} colored twice")
            seen |= 1 << v
    if seen != g.full_mask:
        missing = next(iter_bits(g.full_mask & ~seen))
        return ValidationReport(False, f"vertex {missing} is uncolored")
    for i, cls in enumerate(coloring.classes):
        cmask = mask_of(cls)
        for v in cls:
            bad = g.adj[v] & cmask
            if bad:
                w = next(iter_bits(bad))
                return ValidationReport(
                    False, f"edge ({v}, {w}) inside class {i}"
                )
    for i, cls in enumerate(coloring.classes):
        d = coloring.dominators[i]
        if not (0 <= d < g.n):
            return ValidationReport(False, f"dominator {d} of class {i} out of range")
        cmask = mask_of(cls)
        if cmask & ~g.closed(d):
            return ValidationReport(
                False, f"class {i} is not dominated by vertex {d}"
            )
    return ValidationReport(True)
