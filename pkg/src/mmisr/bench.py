"""Benchmark harness: built-in suites, per-row solving, CSV reporting.

Rows are stable-sorted by (instance id, algorithm) and all randomness flows
from one seed, so reruns are byte-identical.  Timing is opt-in because wall
clock noise would break that guarantee.
"""

import random
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from .baker import solve_baker
from .degeneracy import solve_degeneracy
from .general import solve_general
from .graph import (Graph, Instance, ReconfigSequence, all_independent_sets,
                    degeneracy_ordering, sequence_value, validate_sequence)
from .generators import random_independent_set, random_tree
from .oracle import DEFAULT_LIMITS, CapacityError, OracleLimits, opt_exact
from .tj_exact import solve_exact_via_tj
from .treewidth import (obtain_td, separator_value_guarantee,
                        solve_balanced_separator, solve_fptas,
                        solve_treewidth_combined)

CSV_HEADER = "instance,n,m,algorithm,value,opt,bound,valid,runtime_ms,seed"

BENCH_ALGOS = ("general", "degeneracy", "treewidth", "combined", "fptas",
               "baker", "exact", "oracle")

_DEFAULT_EPS = 0.5


@dataclass(frozen=True)
class BenchRow:
    instance: str
    n: int
    m: int
    algorithm: str
    value: Optional[int]
    opt: Optional[int]
    bound: Optional[float]
    valid: bool
    runtime_ms: int
    seed: int

    def to_csv(self) -> str:
        return ",".join([
            self.instance,
            str(self.n),
            str(self.m),
            self.algorithm,
            "" if self.value is None else str(self.value),
            "" if self.opt is None else str(self.opt),
            "" if self.bound is None else f"{self.bound:.4f}",
            "true" if self.valid else "false",
            str(self.runtime_ms),
            str(self.seed),
        ])


def small_exhaustive_suite() -> list[tuple[str, Instance]]:
    """Every graph on up to six vertices (one per isomorphism class) with
    every unordered pair of its independent sets as endpoints."""
    out: list[tuple[str, Instance]] = []
    for idx, g in enumerate(atlas_graphs()):
        sets = all_independent_sets(g)
        pair_idx = 0
        for i in range(len(sets)):
            for j in range(i, len(sets)):
                name = f"atlas{idx + 1:03d}-p{pair_idx:05d}"
                out.append((name, Instance(g, sets[i], sets[j])))
                pair_idx += 1
    return out


def atlas_graphs() -> list[Graph]:
    """One representative per isomorphism class of graphs on 1..6 vertices."""
    import networkx as nx

    graphs = []
    for atlas_graph in nx.graph_atlas_g():
        n = atlas_graph.number_of_nodes()
        if not (1 <= n <= 6):
            continue
        edges = [(u + 1, v + 1) for u, v in atlas_graph.edges()]
        graphs.append(Graph(n, edges))
    return graphs


def trees_suite(seed: int, count: int = 20, n: int = 200,
                side: int = 60) -> list[tuple[str, Instance]]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        g = random_tree(n, rng)
        ini = random_independent_set(g, rng, size=side)
        tar = random_independent_set(g, rng, size=side)
        out.append((f"tree{n}-{i:03d}", Instance(g, ini, tar)))
    return out


def run_algorithm(name: str, inst: Instance, eps: float = _DEFAULT_EPS,
                  limits: OracleLimits = DEFAULT_LIMITS,
                  td=None) -> tuple[ReconfigSequence, Optional[int]]:
    """Run one algorithm; returns (sequence, floor) where floor is the
    certified per-run value bound when the algorithm produces one."""
    g = inst.graph
    if name == "oracle":
        value, seq = opt_exact(inst, limits)
        return seq, value
    if name == "exact":
        value, seq = solve_exact_via_tj(inst, limits)
        return seq, value
    if name == "general":
        seq, floor = solve_general(inst)
        return seq, floor
    if name == "degeneracy":
        return solve_degeneracy(inst), None
    td = td if td is not None else obtain_td(g)
    if name == "treewidth":
        return solve_balanced_separator(g, td, inst.ini, inst.tar), None
    if name == "combined":
        return solve_treewidth_combined(g, td, inst.ini, inst.tar), None
    if name == "fptas":
        return solve_fptas(g, td, inst.ini, inst.tar, eps, limits), None
    if name == "baker":
        return solve_baker(g, inst.ini, inst.tar, eps, limits), None
    raise ValueError(f"unknown algorithm {name!r}")


def theoretical_bound(name: str, inst: Instance, floor: Optional[int],
                      opt: Optional[int], eps: float = _DEFAULT_EPS,
                      width: Optional[int] = None) -> Optional[float]:
    phi = min(len(inst.ini), len(inst.tar))
    if name in ("oracle", "exact"):
        return None if floor is None else float(floor)
    if name == "general":
        return None if floor is None else float(floor)
    if name == "degeneracy":
        _, d = degeneracy_ordering(inst.graph)
        return max(0.0, phi / max(d, 1) - 1)
    if name in ("treewidth", "combined"):
        t = (width if width is not None else obtain_td(inst.graph).width) + 1
        guarantee = separator_value_guarantee(phi, t)
        if name == "combined":
            _, d = degeneracy_ordering(inst.graph)
            guarantee = max(guarantee, phi / max(d, 1) - 1)
        return max(0.0, guarantee)
    if name in ("fptas", "baker"):
        if opt is None:
            return 0.0
        return opt / (1 + eps)
    return None


def bench_rows(suite: Iterable[tuple[str, Instance]], algos: list[str],
               seed: int, eps: float = _DEFAULT_EPS,
               limits: OracleLimits = DEFAULT_LIMITS,
               timing: bool = False) -> list[BenchRow]:
    rows: list[BenchRow] = []
    for name, inst in suite:
        try:
            opt, _ = opt_exact(inst, limits)
        except CapacityError:
            opt = None
        td = None
        if any(a in ("treewidth", "combined", "fptas") for a in algos):
            td = obtain_td(inst.graph)
        for algo in algos:
            started = time.perf_counter()
            try:
                seq, floor = run_algorithm(algo, inst, eps, limits, td)
            except CapacityError:
                elapsed = int((time.perf_counter() - started) * 1000) if timing else 0
                rows.append(BenchRow(name, inst.graph.n, inst.graph.m, algo,
                                     None, opt, None, False, elapsed, seed))
                continue
            elapsed = int((time.perf_counter() - started) * 1000) if timing else 0
            report = validate_sequence(inst, seq)
            bound = theoretical_bound(algo, inst, floor, opt, eps,
                                      td.width if td is not None else None)
            rows.append(BenchRow(name, inst.graph.n, inst.graph.m, algo,
                                 sequence_value(seq), opt, bound, report.ok,
                                 elapsed, seed))
    rows.sort(key=lambda r: (r.instance, r.algorithm))
    return rows


def write_csv(rows: list[BenchRow], path: str) -> None:
    lines = [CSV_HEADER]
    lines.extend(row.to_csv() for row in rows)
    worst: dict[str, float] = {}
    for row in rows:
        if row.opt is None or row.value is None:
            continue
        if row.opt == 0:
            ratio = 1.0
        elif row.value == 0:
            ratio = float("inf")
        else:
            ratio = row.opt / row.value
        worst[row.algorithm] = max(worst.get(row.algorithm, 1.0), ratio)
    for algo in sorted(set(r.algorithm for r in rows)):
        ratio = worst.get(algo)
        shown = "n/a" if ratio is None else f"{ratio:.4f}"
        lines.append(f"# worst-ratio algorithm={algo} ratio={shown}")
    with open(path, "w") as handle:
        handle.write("\n".join(lines) + "\n")
