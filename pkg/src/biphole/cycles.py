"""Constructive cycles through every vertex of degree at least the
bipartite-hole-number, in 2-connected graphs.

The driver closes the heavy set into a clique by repeatedly joining
nonadjacent heavy vertices, takes the clique cycle, and unwinds the added
edges one level at a time.  Unwinding an edge leaves a path between two
nonadjacent heavy endpoints, and ``rotation_to_cycle`` reroutes that path
into a cycle using the hole-free split (s, t): because no (s,t)-hole exists,
one of a small set of crossing edges must be present, and each possibility
has an explicit cycle formula.  Every formula keeps all path vertices, so
heavy coverage survives each level.

Degrees are always measured in the original graph and the split (s, t) comes
from its certificate: supergraphs keep both the degree bounds and
hole-freeness, which is all the case analysis consumes.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from .errors import InternalInconsistencyError, NotTwoConnectedError, WalkError
from .graph import Graph
from .holes import bipartite_hole_number, hole_number
from .walks import Cycle, OrientedPath, is_cycle_sequence

logger = logging.getLogger(__name__)


def heavy_threshold(g: Graph) -> int:
    """Degree bound above which a vertex must land on the cycle."""
    return hole_number(g)


@dataclass
class RotationContext:
    """Neighborhood partition of the path endpoints around the pivot index.

    ``u_off``/``v_off`` are the off-path neighbor sets of the endpoints;
    ``r_pos`` is the position of the pivot chosen so that exactly
    s - |u_off| on-path neighbors of the first endpoint lie at or before it.
    The u2/u3 and v2/v3 splits are the on-path neighbor positions on either
    side of the pivot.
    """

    path: OrientedPath
    s: int
    t: int
    u_off: tuple[int, ...]
    v_off: tuple[int, ...]
    r_pos: int
    u2_pos: tuple[int, ...]
    u3_pos: tuple[int, ...]
    v2_pos: tuple[int, ...]
    v3_pos: tuple[int, ...]


def _finish_cycle(g: Graph, seq: Sequence[int], must_cover: Sequence[int]) -> Cycle:
    try:
        cyc = Cycle(g, seq)
    except WalkError as exc:
        raise InternalInconsistencyError(f"rotation produced an invalid cycle: {exc}")
    if not set(must_cover) <= set(seq):
        raise InternalInconsistencyError("rotation dropped a path vertex")
    return cyc


def rotation_to_cycle(g: Graph, path, s: int, t: int) -> Cycle:
    """Close a (u, v)-path into a cycle covering all of it.

    Requires nonadjacent endpoints, a split with no (s,t)-hole in g, and
    endpoint degrees at least s + t - 1.  The three crossing-edge scans are
    tried in order; within a scan, candidate pairs are lexicographic by
    vertex id, so the output is deterministic.
    """
    p = path if isinstance(path, OrientedPath) else OrientedPath(g, path)
    if s < 1 or t < 1:
        raise ValueError("split sides must be at least 1")
    verts = p.vertices
    k = len(verts)
    u, v = verts[0], verts[-1]
    if g.has_edge(u, v):
        raise ValueError("path endpoints must be nonadjacent")
    if k < 3:
        raise ValueError("path must have at least three vertices")
    pos = {x: i for i, x in enumerate(verts)}
    on_path = set(verts)

    u_off = sorted(w for w in g.neighbors(u) if w not in on_path)
    v_off = sorted(w for w in g.neighbors(v) if w not in on_path)
    v_on_pos = sorted(pos[w] for w in g.neighbors(v) if w in on_path)
    # Successors exist: v's on-path neighbors cannot include the last vertex.
    v_on_succ = [verts[i + 1] for i in v_on_pos]

    # Scan 1: off-path neighbors of u against v_off and the shifted v-neighbors.
    for x in u_off:
        for y in v_off:
            if g.has_edge(x, y):
                return _finish_cycle(g, list(verts) + [y, x], verts)
    for x in u_off:
        for y in sorted(v_on_succ):
            if g.has_edge(x, y):
                iy = pos[y]
                seq = list(verts[:iy]) + list(reversed(verts[iy:])) + [x]
                return _finish_cycle(g, seq, verts)

    if len(u_off) > s - 1:
        raise InternalInconsistencyError(
            "scan 1 exhausted with too many off-path neighbors; wrong split?"
        )

    need = s - len(u_off)
    u_on_pos = sorted(pos[w] for w in g.neighbors(u) if w in on_path)
    if len(u_on_pos) < need:
        raise InternalInconsistencyError(
            "first endpoint has too few on-path neighbors; wrong split?"
        )
    r_pos = u_on_pos[need - 1]
    ctx = RotationContext(
        path=p,
        s=s,
        t=t,
        u_off=tuple(u_off),
        v_off=tuple(v_off),
        r_pos=r_pos,
        u2_pos=tuple(u_on_pos[:need]),
        u3_pos=tuple(i for i in u_on_pos[need:] if i <= k - 2),
        v2_pos=tuple(i for i in v_on_pos if r_pos <= i <= k - 2),
        v3_pos=tuple(i for i in v_on_pos if 1 <= i <= r_pos - 1),
    )

    # Scan 2: predecessors of the early u-neighbors against v_off and the
    # shifted late v-neighbors.
    u2_pred = sorted(verts[i - 1] for i in ctx.u2_pos)
    for x in u2_pred:
        ix = pos[x]
        for y in ctx.v_off:
            if g.has_edge(x, y):
                seq = list(verts[: ix + 1]) + [y] + list(reversed(verts[ix + 1 :]))
                return _finish_cycle(g, seq, verts)
    v2_succ = sorted(verts[i + 1] for i in ctx.v2_pos)
    for x in u2_pred:
        ix = pos[x]
        for y in v2_succ:
            iy = pos[y]
            if g.has_edge(x, y) and iy > ix + 1:
                seq = (
                    list(verts[: ix + 1])
                    + list(verts[iy:])
                    + list(reversed(verts[ix + 1 : iy]))
                )
                return _finish_cycle(g, seq, verts)

    if logger.isEnabledFor(logging.DEBUG):
        v1v2 = len(ctx.v_off) + len(ctx.v2_pos)
        if v1v2 > t - 1 or len(ctx.v3_pos) < s:
            logger.debug(
                "rotation bookkeeping off: |V1 u V2|=%d, |V3|=%d, (s,t)=(%d,%d)",
                v1v2, len(ctx.v3_pos), s, t,
            )

    # Scan 3: successors of the early v-neighbors against the first vertex
    # and the shifted late u-neighbors.
    v3_succ = sorted(verts[i + 1] for i in ctx.v3_pos)
    for x in v3_succ:
        ix = pos[x]
        if g.has_edge(x, u):
            seq = list(verts[:ix]) + list(reversed(verts[ix:]))
            return _finish_cycle(g, seq, verts)
    u3_succ = sorted(verts[i + 1] for i in ctx.u3_pos)
    for x in v3_succ:
        ix = pos[x]
        for y in u3_succ:
            iy = pos[y]
            if g.has_edge(x, y) and iy > ix:
                seq = (
                    list(verts[:ix])
                    + list(reversed(verts[iy:]))
                    + list(verts[ix:iy])
                )
                return _finish_cycle(g, seq, verts)

    raise InternalInconsistencyError(
        "no rotation case applies; the split is not hole-free or a "
        "precondition was violated"
    )


def _cycle_through_pair(g: Graph, a: int, b: int) -> list[int]:
    p1, p2 = g.two_disjoint_paths(a, b)
    return p1 + p2[-2:0:-1]


def _any_cycle(g: Graph) -> list[int]:
    x = 0
    y = min(g.neighbors(x))
    return _cycle_through_pair(g, x, y)


def cycle_through_heavy(g: Graph) -> Cycle:
    """A cycle containing every vertex whose degree meets the hole-number.

    Raises NotTwoConnectedError when the input is not 2-connected, and
    InternalInconsistencyError only on a bug (the underlying statement
    guarantees success).
    """
    if not g.is_two_connected():
        raise NotTwoConnectedError("cycle_through_heavy requires a 2-connected graph")
    cert = bipartite_hole_number(g)
    threshold = cert.value
    heavy = [x for x in range(g.n) if g.degree(x) >= threshold]

    if len(heavy) == 0:
        seq = _any_cycle(g)
    elif len(heavy) == 1:
        seq = _cycle_through_pair(g, heavy[0], min(g.neighbors(heavy[0])))
    elif len(heavy) == 2:
        seq = _cycle_through_pair(g, heavy[0], heavy[1])
    else:
        s, t = cert.hole_free_pair
        # Closure: join nonadjacent heavy pairs, lexicographically smallest
        # first, until the heavy set is a clique.
        levels = [g]
        added: list[tuple[int, int]] = []
        current = g
        while True:
            pair = next(
                (
                    (a, b)
                    for i, a in enumerate(heavy)
                    for b in heavy[i + 1 :]
                    if not current.has_edge(a, b)
                ),
                None,
            )
            if pair is None:
                break
            current = current.add_edge(*pair)
            levels.append(current)
            added.append(pair)
        seq = list(heavy)  # clique cycle, ascending
        # Unwind: if the cycle uses the edge added at this level, open it
        # into a path and rotate in the one-thinner graph; otherwise the
        # cycle already lives there.
        for level in range(len(added), 0, -1):
            a, b = added[level - 1]
            thinner = levels[level - 1]
            cyc = Cycle(levels[level], seq)
            if cyc.uses_edge(a, b):
                path_seq = cyc.open_at(a, b).vertices
                seq = list(rotation_to_cycle(thinner, OrientedPath(thinner, path_seq), s, t).vertices)

    cyc = Cycle(g, seq)
    if not verify_heavy_cycle(g, cyc, threshold):
        raise InternalInconsistencyError("constructed cycle failed validation")
    return cyc


def verify_heavy_cycle(g: Graph, cycle, threshold: int) -> bool:
    """True iff ``cycle`` is a valid cycle of g covering every vertex of
    degree at least ``threshold``."""
    seq = list(cycle.vertices) if isinstance(cycle, Cycle) else list(cycle)
    if not is_cycle_sequence(g, seq):
        return False
    members = set(seq)
    return all(g.degree(x) < threshold or x in members for x in range(g.n))
