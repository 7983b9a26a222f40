"""Oriented paths and cycles with the navigation the rotation arguments need.

An OrientedPath is a sequence of distinct, consecutively adjacent vertices
with a fixed direction, supporting successor/predecessor lookups, shifted
vertex sets, and segment extraction in both directions.  A Cycle additionally
closes up.  Both validate against their graph at construction time.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import WalkError
from .graph import Graph


def _check_sequence(g: Graph, vertices: Sequence[int], kind: str) -> tuple[int, ...]:
    verts = tuple(vertices)
    if len(set(verts)) != len(verts):
        raise WalkError(f"{kind} repeats a vertex: {verts}")
    for v in verts:
        if not 0 <= v < g.n:
            raise WalkError(f"{kind} vertex {v} outside graph")
    for a, b in zip(verts, verts[1:]):
        if not g.has_edge(a, b):
            raise WalkError(f"{kind} uses non-edge ({a},{b})")
    return verts


def is_path_sequence(g: Graph, vertices: Sequence[int]) -> bool:
    try:
        _check_sequence(g, vertices, "path")
    except WalkError:
        return False
    return len(vertices) >= 1


def is_cycle_sequence(g: Graph, vertices: Sequence[int]) -> bool:
    try:
        _check_sequence(g, vertices, "cycle")
    except WalkError:
        return False
    return len(vertices) >= 3 and g.has_edge(vertices[-1], vertices[0])


class OrientedPath:
    """A directed simple path; orientation runs from ``first`` to ``last``."""

    __slots__ = ("graph", "vertices", "_pos")

    def __init__(self, g: Graph, vertices: Sequence[int]):
        verts = _check_sequence(g, vertices, "path")
        if not verts:
            raise WalkError("path must contain at least one vertex")
        self.graph = g
        self.vertices = verts
        self._pos = {v: i for i, v in enumerate(verts)}

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self._pos

    def __eq__(self, other):
        return isinstance(other, OrientedPath) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "OrientedPath(" + "-".join(map(str, self.vertices)) + ")"

    def index(self, v: int) -> int:
        return self._pos[v]

    def succ(self, v: int) -> int:
        i = self._pos[v]
        if i == len(self.vertices) - 1:
            raise WalkError(f"{v} is the last vertex; no successor")
        return self.vertices[i + 1]

    def pred(self, v: int) -> int:
        i = self._pos[v]
        if i == 0:
            raise WalkError(f"{v} is the first vertex; no predecessor")
        return self.vertices[i - 1]

    def succ_set(self, vertices: Iterable[int]) -> set[int]:
        """Shift a subset forward; the last vertex contributes nothing."""
        last = self.vertices[-1]
        return {self.succ(v) for v in vertices if v != last}

    def pred_set(self, vertices: Iterable[int]) -> set[int]:
        first = self.vertices[0]
        return {self.pred(v) for v in vertices if v != first}

    def seg(self, x: int, y: int) -> list[int]:
        """Segment from x to y following the orientation."""
        ix, iy = self._pos[x], self._pos[y]
        if ix > iy:
            raise WalkError(f"forward segment needs index({x}) <= index({y})")
        return list(self.vertices[ix : iy + 1])

    def seg_rev(self, x: int, y: int) -> list[int]:
        """Segment starting at x and walking back to y, against orientation."""
        ix, iy = self._pos[x], self._pos[y]
        if ix < iy:
            raise WalkError(f"backward segment needs index({x}) >= index({y})")
        return list(reversed(self.vertices[iy : ix + 1]))

    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def flip(self) -> "OrientedPath":
        return OrientedPath(self.graph, tuple(reversed(self.vertices)))


class Cycle:
    """At least three distinct vertices, cyclically consecutive in the graph."""

    __slots__ = ("graph", "vertices")

    def __init__(self, g: Graph, vertices: Sequence[int]):
        verts = _check_sequence(g, vertices, "cycle")
        if len(verts) < 3:
            raise WalkError("cycle needs at least three vertices")
        if not g.has_edge(verts[-1], verts[0]):
            raise WalkError(f"cycle does not close: ({verts[-1]},{verts[0]})")
        self.graph = g
        self.vertices = verts

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    def __eq__(self, other):
        return isinstance(other, Cycle) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "Cycle(" + "-".join(map(str, self.vertices)) + ")"

    def uses_edge(self, u: int, v: int) -> bool:
        """True if (u, v) is one of the cycle's edges."""
        k = len(self.vertices)
        for i, a in enumerate(self.vertices):
            b = self.vertices[(i + 1) % k]
            if {a, b} == {u, v}:
                return True
        return False

    def open_at(self, u: int, v: int) -> OrientedPath:
        """Drop cycle edge (u, v) and return the remaining (u, v)-path.

        The path is rebuilt in the cycle's graph, so callers re-rooting it in
        a subgraph must revalidate there.
        """
        verts = self.vertices
        k = len(verts)
        for i, a in enumerate(verts):
            b = verts[(i + 1) % k]
            if {a, b} == {u, v}:
                seq = [verts[(i + 1 + j) % k] for j in range(k)]
                if seq[0] != u:
                    seq.reverse()
                return OrientedPath(self.graph, seq)
        raise WalkError(f"cycle does not use edge ({u},{v})")
