"""Command-line front end: generate, solve, validate, benchmark.

Exit codes: 0 success, 1 failed validation, 2 capacity refusal, 64 bad flags
or parameters, 65 unparseable or invalid input files.
"""

import argparse
import glob as globlib
import random
import sys
from pathlib import Path

from . import bench as benchmod
from .baker import solve_baker
from .degeneracy import solve_degeneracy
from .formats import (ParseError, format_graph, format_instance,
                      format_sequence, parse_graph, parse_instance, parse_td,
                      parse_sequence)
from .gadgets import (gen_bandwidth_padding, gen_bipartite_complement,
                      gen_degree_gadget, gen_union_biclique)
from .general import solve_general
from .graph import (Graph, Instance, degeneracy_ordering, sequence_value,
                    validate_sequence)
from .generators import grid_graph, random_gnp, random_tree
from .oracle import DEFAULT_LIMITS, CapacityError, opt_exact
from .tj_exact import solve_exact_via_tj
from .treewidth import (TreeDecompositionError, obtain_td,
                        separator_value_guarantee, solve_balanced_separator,
                        solve_fptas, solve_treewidth_combined)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CAPACITY = 2
EXIT_USAGE = 64
EXIT_PARSE = 65

ALGOS = ("auto", "general", "degeneracy", "treewidth", "combined", "fptas",
         "baker", "exact", "oracle")

GEN_KINDS = ("union-biclique", "bipartite-complement", "bandwidth-pad",
             "degree-gadget", "random-gnp", "random-tree", "grid")

_SEEDED_KINDS = ("degree-gadget", "random-gnp", "random-tree")


class _UsageError(SystemExit):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError(EXIT_USAGE)


def build_parser() -> _Parser:
    parser = _Parser(prog="mmisr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve an instance file")
    solve.add_argument("instance")
    solve.add_argument("--algo", choices=ALGOS, default="auto")
    solve.add_argument("--td", help="tree decomposition file (.td)")
    solve.add_argument("--eps", type=float, default=0.5)
    solve.add_argument("-o", "--output", help="sequence output path")

    val = sub.add_parser("validate", help="check a sequence against an instance")
    val.add_argument("instance")
    val.add_argument("sequence")

    gen = sub.add_parser("gen", help="write a generated graph or instance")
    gen.add_argument("kind", choices=GEN_KINDS)
    gen.add_argument("--input", help="input graph file (.gr)")
    gen.add_argument("--k", type=int, help="biclique side size")
    gen.add_argument("--left", type=int, help="bipartition size |L| of the input")
    gen.add_argument("--delta", type=float, help="padding exponent in (0, 1/2)")
    gen.add_argument("--delta-reg", type=int, help="regular degree (>= 3)")
    gen.add_argument("--n", type=int)
    gen.add_argument("--p", type=float)
    gen.add_argument("--rows", type=int)
    gen.add_argument("--cols", type=int)
    gen.add_argument("--seed", type=int)
    gen.add_argument("-o", "--output", required=True)

    bench = sub.add_parser("bench", help="run a suite and emit a CSV")
    bench.add_argument("--suite", required=True,
                       help="small-exhaustive, trees-200, or a .misr glob")
    bench.add_argument("--algos", required=True,
                       help="comma-separated algorithm list")
    bench.add_argument("--csv", required=True)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--eps", type=float, default=0.5)
    bench.add_argument("--timing", action="store_true",
                       help="record wall time (breaks byte-identical reruns)")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        return exc.code
    try:
        if args.command == "solve":
            return _solve_cmd(args)
        if args.command == "validate":
            return _validate_cmd(args)
        if args.command == "gen":
            return _gen_cmd(args)
        if args.command == "bench":
            return _bench_cmd(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TreeDecompositionError as exc:
        print(f"invalid tree decomposition: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"capacity refusal: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _read(path: str) -> str:
    return Path(path).read_text()


def _solve_cmd(args) -> int:
    if args.eps <= 0:
        print("error: --eps must be positive", file=sys.stderr)
        return EXIT_USAGE
    inst = parse_instance(_read(args.instance))
    g = inst.graph
    td = None
    if args.td is not None:
        td = obtain_td(g, parse_td(_read(args.td)))

    algo = args.algo
    if algo == "auto":
        if g.n <= DEFAULT_LIMITS.max_vertices:
            algo = "exact"
        elif g.n <= 400:
            algo = "combined"
        else:
            algo = "degeneracy"

    phi = min(len(inst.ini), len(inst.tar))
    floor = None
    if algo == "oracle":
        floor, seq = opt_exact(inst)
    elif algo == "exact":
        floor, seq = solve_exact_via_tj(inst)
    elif algo == "general":
        seq, floor = solve_general(inst)
    elif algo == "degeneracy":
        seq = solve_degeneracy(inst)
    elif algo == "baker":
        seq = solve_baker(g, inst.ini, inst.tar, args.eps)
    else:
        if td is None:
            td = obtain_td(g)
        if algo == "treewidth":
            seq = solve_balanced_separator(g, td, inst.ini, inst.tar)
        elif algo == "combined":
            seq = solve_treewidth_combined(g, td, inst.ini, inst.tar)
        else:
            seq = solve_fptas(g, td, inst.ini, inst.tar, args.eps)

    bound = _solve_bound(algo, inst, floor, phi, td, args.eps)
    out = args.output or str(Path(args.instance).with_suffix(".seq"))
    Path(out).write_text(format_sequence(seq))
    print(f"algo={algo} value={sequence_value(seq)} bound={bound:.4f}")
    return EXIT_OK


def _solve_bound(algo, inst, floor, phi, td, eps) -> float:
    if floor is not None:
        return float(floor)
    if algo == "degeneracy":
        _, d = degeneracy_ordering(inst.graph)
        return max(0.0, phi / max(d, 1) - 1)
    if algo in ("treewidth", "combined", "fptas"):
        t = (td.width if td is not None else obtain_td(inst.graph).width) + 1
        guarantee = separator_value_guarantee(phi, t)
        if algo == "combined":
            _, d = degeneracy_ordering(inst.graph)
            guarantee = max(guarantee, phi / max(d, 1) - 1)
        if algo == "fptas" and not (guarantee > 0 and phi / guarantee <= 1 + eps):
            return 0.0
        return max(0.0, guarantee)
    return 0.0


def _validate_cmd(args) -> int:
    inst = parse_instance(_read(args.instance))
    seq = parse_sequence(_read(args.sequence))
    report = validate_sequence(inst, seq)
    if report.ok:
        print(f"value={sequence_value(seq)}")
        return EXIT_OK
    idx, reason = report.first_violation
    print(f"{reason}@{idx}")
    return EXIT_INVALID


def _gen_cmd(args) -> int:
    kind = args.kind
    if kind in _SEEDED_KINDS and args.seed is None:
        print(f"error: --seed is required for {kind}", file=sys.stderr)
        return EXIT_USAGE

    def need(name):
        value = getattr(args, name.replace("-", "_"))
        if value is None:
            print(f"error: --{name} is required for {kind}", file=sys.stderr)
            raise _UsageError(EXIT_USAGE)
        return value

    try:
        if kind == "union-biclique":
            g = parse_graph(_read(need("input")))
            payload = format_instance(gen_union_biclique(g, need("k")))
        elif kind == "bipartite-complement":
            g = parse_graph(_read(need("input")))
            left = need("left")
            if not (0 < left < g.n):
                raise ValueError("--left must split the vertices in two")
            tagged = Graph(g.n, g.edges,
                           bipartition=(range(1, left + 1), range(left + 1, g.n + 1)))
            payload = format_instance(gen_bipartite_complement(tagged))
        elif kind == "bandwidth-pad":
            g = parse_graph(_read(need("input")))
            payload = format_graph(gen_bandwidth_padding(g, need("delta")))
        elif kind == "degree-gadget":
            g = parse_graph(_read(need("input")))
            payload = format_instance(
                gen_degree_gadget(g, need("delta-reg"), args.seed))
        elif kind == "random-gnp":
            rng = random.Random(args.seed)
            payload = format_graph(random_gnp(need("n"), need("p"), rng))
        elif kind == "random-tree":
            rng = random.Random(args.seed)
            payload = format_graph(random_tree(need("n"), rng))
        else:
            payload = format_graph(grid_graph(need("rows"), need("cols")))
    except _UsageError as exc:
        return exc.code
    Path(args.output).write_text(payload)
    return EXIT_OK


def _bench_cmd(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    bad = [a for a in algos if a not in benchmod.BENCH_ALGOS]
    if not algos or bad:
        print(f"error: unknown algorithms {bad}", file=sys.stderr)
        return EXIT_USAGE
    if args.suite == "small-exhaustive":
        suite = benchmod.small_exhaustive_suite()
    elif args.suite == "trees-200":
        suite = benchmod.trees_suite(args.seed)
    else:
        paths = sorted(globlib.glob(args.suite))
        suite = [(Path(p).name, parse_instance(_read(p))) for p in paths]
    rows = benchmod.bench_rows(suite, algos, args.seed, eps=args.eps,
                               timing=args.timing)
    benchmod.write_csv(rows, args.csv)
    print(f"wrote {len(rows)} rows to {args.csv}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
