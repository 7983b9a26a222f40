"""Property sweeps over graph streams: theorem soundness, oracle agreement,
certificate validity, format round-trips.

Each property takes a graph and returns None when it does not apply, or a
list of failure records (empty meaning pass).  The runner walks a graph
source, optionally fanning out over worker processes, and aggregates a
deterministic summary; every failure carries the offending graph6 line so it
can be replayed.
"""
from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field

from .conditions import check_fan_type, check_liu_yuan_zhang
from .cycles import cycle_through_heavy, verify_heavy_cycle
from .errors import BipholeError, SizeGuardError, UnknownNameError
from .formats import parse_graph6, write_graph6
from .generators import enumerate_labeled, erdos_renyi
from .graph import Graph
from .holes import hole_number, naive_hole_number, bipartite_hole_number, validate_certificate
from .oracle import brute_hamiltonian, brute_hamiltonian_connected
from .paths import heavy_path, verify_heavy_path


def _prop_alpha_oracle(g: Graph):
    try:
        naive = naive_hole_number(g)
    except SizeGuardError:
        return None
    cert = bipartite_hole_number(g)
    failures = []
    if cert.value != naive:
        failures.append(
            {"detail": f"value {cert.value} disagrees with naive {naive}"}
        )
    if not validate_certificate(g, cert):
        failures.append({"detail": "certificate failed validation"})
    return failures


def _prop_heavy_cycle(g: Graph):
    if not g.is_two_connected():
        return None
    threshold = hole_number(g)
    try:
        cyc = cycle_through_heavy(g)
    except BipholeError as exc:
        return [{"detail": f"construction raised {type(exc).__name__}: {exc}"}]
    if not verify_heavy_cycle(g, cyc, threshold):
        return [{"detail": "cycle failed verification"}]
    return []


def _prop_heavy_path(g: Graph):
    if g.n < 2 or not g.is_connected():
        return None
    threshold = hole_number(g) + 1
    failures = []
    ran = False
    for u in range(g.n):
        if g.degree(u) < threshold:
            continue
        for v in range(u + 1, g.n):
            if g.degree(v) < threshold:
                continue
            ran = True
            try:
                p = heavy_path(g, u, v)
            except BipholeError as exc:
                failures.append(
                    {"detail": f"({u},{v}) raised {type(exc).__name__}: {exc}"}
                )
                continue
            if not verify_heavy_path(g, p, u, v, threshold):
                failures.append({"detail": f"({u},{v}) failed verification"})
    return failures if ran else None


def _prop_min_degree_ham(g: Graph):
    if g.n < 3:
        return None
    if g.min_degree() < hole_number(g):
        return None
    failures = []
    try:
        cyc = cycle_through_heavy(g)
        if len(cyc) != g.n:
            failures.append(
                {"detail": f"expected Hamilton cycle, got length {len(cyc)}"}
            )
    except BipholeError as exc:
        failures.append({"detail": f"construction raised {type(exc).__name__}: {exc}"})
    if not brute_hamiltonian(g):
        failures.append({"detail": "oracle says non-hamiltonian"})
    return failures


def _prop_min_degree_hc(g: Graph):
    if g.n < 3:
        return None
    if g.min_degree() < hole_number(g) + 1:
        return None
    failures = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            try:
                p = heavy_path(g, u, v)
                if len(p) != g.n:
                    failures.append(
                        {"detail": f"({u},{v}): not a Hamilton path"}
                    )
            except BipholeError as exc:
                failures.append(
                    {"detail": f"({u},{v}) raised {type(exc).__name__}: {exc}"}
                )
    if not brute_hamiltonian_connected(g):
        failures.append({"detail": "oracle says not hamiltonian-connected"})
    return failures


def _prop_fan_ham(g: Graph):
    if not g.is_two_connected():
        return None
    at = hole_number(g)
    failures = []
    if check_fan_type(g, at).holds and not brute_hamiltonian(g):
        failures.append({"detail": "fan-type condition holds but graph is not hamiltonian"})
    if check_liu_yuan_zhang(g, at).holds and not brute_hamiltonian(g):
        failures.append({"detail": "distance-two degree condition holds but graph is not hamiltonian"})
    return failures


def _prop_dirac_chain(g: Graph):
    if g.n < 1 or 2 * g.min_degree() < g.n:
        return None
    bound = (g.n + 1) // 2
    if hole_number(g) > bound:
        return [{"detail": f"hole-number exceeds ceil(n/2) = {bound}"}]
    return []


def _prop_g6_roundtrip(g: Graph):
    encoded = write_graph6(g)
    if parse_graph6(encoded) != g:
        return [{"detail": f"round-trip mismatch via {encoded!r}"}]
    return []


PROPERTIES = {
    "alpha-oracle": _prop_alpha_oracle,
    "heavy-cycle": _prop_heavy_cycle,
    "heavy-path": _prop_heavy_path,
    "min-degree-ham": _prop_min_degree_ham,
    "min-degree-hc": _prop_min_degree_hc,
    "fan-ham": _prop_fan_ham,
    "dirac-chain": _prop_dirac_chain,
    "g6-roundtrip": _prop_g6_roundtrip,
}


def property_names() -> tuple[str, ...]:
    return tuple(PROPERTIES)


@dataclass
class SweepResult:
    checked: dict[str, int] = field(default_factory=dict)
    skipped: dict[str, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "SweepResult") -> None:
        for k, n in other.checked.items():
            self.checked[k] = self.checked.get(k, 0) + n
        for k, n in other.skipped.items():
            self.skipped[k] = self.skipped.get(k, 0) + n
        self.failures.extend(other.failures)


def check_graph(g: Graph, properties: list[str]) -> SweepResult:
    result = SweepResult()
    g6 = None
    for name in properties:
        try:
            prop = PROPERTIES[name]
        except KeyError:
            raise UnknownNameError("property", name, property_names()) from None
        outcome = prop(g)
        if outcome is None:
            result.skipped[name] = result.skipped.get(name, 0) + 1
            continue
        result.checked[name] = result.checked.get(name, 0) + 1
        if outcome:
            if g6 is None:
                g6 = write_graph6(g)
            for record in outcome:
                result.failures.append({"property": name, "graph6": g6, **record})
    return result


def _run_batch(task) -> SweepResult:
    kind, payload, properties = task
    result = SweepResult()
    if kind == "g6":
        graphs = (parse_graph6(line) for line in payload)
    else:
        n, lo, hi = payload
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]

        def gen():
            for mask in range(lo, hi):
                adj = [0] * n
                m = mask
                while m:
                    low = m & -m
                    a, b = pairs[low.bit_length() - 1]
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a
                    m ^= low
                yield Graph._from_adj(n, adj)

        graphs = gen()
    for g in graphs:
        result.merge(check_graph(g, properties))
    return result


def _finalize(result: SweepResult) -> SweepResult:
    result.failures.sort(
        key=lambda r: (r["property"], r["graph6"], r.get("detail", ""))
    )
    return result


def run_enumerated(
    n: int, properties: list[str], jobs: int = 1, allow_large: bool = False
) -> SweepResult:
    """Sweep all labeled graphs on exactly n vertices."""
    for name in properties:
        if name not in PROPERTIES:
            raise UnknownNameError("property", name, property_names())
    total = 1 << (n * (n - 1) // 2)
    if jobs <= 1:
        result = SweepResult()
        for g in enumerate_labeled(n, allow_large=allow_large):
            result.merge(check_graph(g, properties))
        return _finalize(result)
    next(enumerate_labeled(n, allow_large=allow_large))  # gate check
    chunk = max(1, total // (jobs * 8))
    tasks = [
        ("enum", (n, lo, min(lo + chunk, total)), properties)
        for lo in range(0, total, chunk)
    ]
    return _run_tasks(tasks, jobs)


def run_graph6_lines(
    lines: list[str], properties: list[str], jobs: int = 1
) -> SweepResult:
    for name in properties:
        if name not in PROPERTIES:
            raise UnknownNameError("property", name, property_names())
    if jobs <= 1:
        result = SweepResult()
        for line in lines:
            result.merge(check_graph(parse_graph6(line), properties))
        return _finalize(result)
    chunk = max(1, len(lines) // (jobs * 8))
    tasks = [
        ("g6", lines[i : i + chunk], properties)
        for i in range(0, len(lines), chunk)
    ]
    return _run_tasks(tasks, jobs)


def _run_tasks(tasks, jobs: int) -> SweepResult:
    ctx = multiprocessing.get_context("fork")
    result = SweepResult()
    with ctx.Pool(processes=jobs) as pool:
        for part in pool.imap_unordered(_run_batch, tasks):
            result.merge(part)
    return _finalize(result)


def random_corpus(count: int, n: int, p_num: int, p_den: int, seed: int) -> list[str]:
    """Seeded G(n, p) sample, serialized as graph6 lines."""
    return [
        write_graph6(erdos_renyi(n, p_num, p_den, seed + i)) for i in range(count)
    ]
