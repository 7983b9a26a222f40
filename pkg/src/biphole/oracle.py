"""Brute-force ground truth for cycles and paths through prescribed vertices.

Plain backtracking over vertex sequences with two safe prunes: every still
required vertex must keep at least two usable neighbors, and everything we
still owe must stay reachable.  A hard size guard raises instead of hanging;
override per call or with the BIPHOLE_ORACLE_LIMIT environment variable.
"""
from __future__ import annotations

import os
from typing import Iterable

from .errors import SizeGuardError
from .graph import Graph, iter_bits, mask_of

DEFAULT_LIMIT = 14
_ENV_VAR = "BIPHOLE_ORACLE_LIMIT"


def _limit(max_n: int | None) -> int:
    if max_n is not None:
        return max_n
    env = os.environ.get(_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_LIMIT


def _guard(g: Graph, max_n: int | None) -> None:
    limit = _limit(max_n)
    if g.n > limit:
        raise SizeGuardError(f"oracle guarded at n <= {limit}; got n = {g.n}")


def _reachable(g: Graph, start_mask: int, allowed: int) -> int:
    seen = frontier = start_mask & allowed
    while frontier:
        nxt = 0
        for b in iter_bits(frontier):
            nxt |= g.adj_mask(b)
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def brute_cycle_through_set(
    g: Graph, required: Iterable[int], max_n: int | None = None
) -> list[int] | None:
    """Some cycle whose vertex set covers ``required``, or None."""
    _guard(g, max_n)
    need_mask = mask_of(required)
    if need_mask >> g.n:
        raise ValueError("required vertex outside graph")
    if g.n < 3:
        return None
    if need_mask == 0:
        for a in range(g.n):
            found = brute_cycle_through_set(g, [a], max_n=max_n)
            if found is not None:
                return found
        return None
    anchor = (need_mask & -need_mask).bit_length() - 1
    full = (1 << g.n) - 1
    anchor_bit = 1 << anchor

    def extend(path: list[int], visited: int, need: int) -> list[int] | None:
        cur = path[-1]
        if need == 0 and len(path) >= 3 and g.has_edge(cur, anchor):
            return path
        avail = (full & ~visited) | anchor_bit
        # Every still-required vertex needs two usable cycle neighbors and
        # must be reachable from the current endpoint.
        probe = avail | (1 << cur)
        reach = _reachable(g, g.adj_mask(cur) & probe, probe)
        if need & ~reach or not reach & anchor_bit:
            return None
        for w in iter_bits(need):
            if (g.adj_mask(w) & probe).bit_count() < 2:
                return None
        for nxt in iter_bits(g.adj_mask(cur) & avail & ~anchor_bit):
            path.append(nxt)
            found = extend(path, visited | (1 << nxt), need & ~(1 << nxt))
            if found is not None:
                return found
            path.pop()
        return None

    return extend([anchor], anchor_bit, need_mask & ~anchor_bit)


def brute_path_through_set(
    g: Graph, u: int, v: int, required: Iterable[int], max_n: int | None = None
) -> list[int] | None:
    """Some (u, v)-path whose vertex set covers ``required``, or None."""
    if u == v:
        raise ValueError("endpoints must differ")
    _guard(g, max_n)
    need_mask = mask_of(required) & ~((1 << u) | (1 << v))
    if (need_mask | (1 << u) | (1 << v)) >> g.n:
        raise ValueError("vertex outside graph")
    full = (1 << g.n) - 1
    v_bit = 1 << v

    def extend(path: list[int], visited: int, need: int) -> list[int] | None:
        cur = path[-1]
        if need == 0 and g.has_edge(cur, v):
            path.append(v)
            return path
        avail = full & ~visited  # v not yet visited, so v stays available
        probe = avail | (1 << cur)
        reach = _reachable(g, g.adj_mask(cur) & probe, probe)
        if need & ~reach or not reach & v_bit:
            return None
        for w in iter_bits(need):
            if (g.adj_mask(w) & probe).bit_count() < 2:
                return None
        for nxt in iter_bits(g.adj_mask(cur) & avail & ~v_bit):
            path.append(nxt)
            found = extend(path, visited | (1 << nxt), need & ~(1 << nxt))
            if found is not None:
                return found
            path.pop()
        return None

    return extend([u], 1 << u, need_mask)


def brute_hamiltonian(g: Graph, max_n: int | None = None) -> bool:
    """Exact Hamilton cycle decision by backtracking."""
    if g.n < 3:
        return False
    return brute_cycle_through_set(g, range(g.n), max_n=max_n) is not None


def brute_hamiltonian_connected(g: Graph, max_n: int | None = None) -> bool:
    """Hamilton path between every pair of distinct vertices."""
    _guard(g, max_n)
    if g.n == 1:
        return True
    everything = range(g.n)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if brute_path_through_set(g, u, v, everything, max_n=max_n) is None:
                return False
    return True
