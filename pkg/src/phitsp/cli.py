"""Command-line harness: solve, oracle, check, gen, bench."""
from __future__ import annotations

import argparse
import csv
import sys
import time
from fractions import Fraction
from pathlib import Path

from .baselines import get_phi, phi_algorithm_ids, tsp_algorithm_ids
from .errors import PhiTspError
from .graphs import EdgeMultiSet, WeightedGraph
from .instances import gen_random, parse_instance, parse_tour, write_instance, write_tour
from .interfaces import PhiInstance, check_feasibility, is_phi_tour
from .oracle import oracle_path_tsp, oracle_phi_opt, oracle_tsp
from .reduction import BoostParams, SolveReport, solve_phi_tsp

CSV_COLUMNS = ["instance", "algorithm", "epsilon", "k", "levels", "length", "optimum", "ratio", "valid", "millis"]


def _frac(text: str) -> Fraction:
    return Fraction(text)


def _load_instance(path: str) -> PhiInstance:
    return parse_instance(Path(path).read_text())


def _fmt(q) -> str:
    if q is None:
        return ""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _solve_with(inst: PhiInstance, name: str, args) -> tuple[EdgeMultiSet, SolveReport]:
    if name == "boost":
        params = BoostParams(
            epsilon=args.epsilon,
            k_interface_cap=args.k,
            max_boost_iters=args.levels,
            tsp_id=args.tsp,
            base_id=args.base,
        )
        return solve_phi_tsp(inst, params)
    algo = get_phi(name)
    started = time.perf_counter()
    tour = algo.run(inst)
    millis = round((time.perf_counter() - started) * 1000)
    report = SolveReport(
        instance="",
        algorithm=name,
        epsilon=Fraction(0),
        k=inst.interface.size,
        levels=0,
        length=inst.graph.multiset_length(tour),
        optimum=None,
        ratio=None,
        valid=is_phi_tour(tour, inst),
        millis=millis,
    )
    return tour, report


def run_solve(args) -> int:
    inst = _load_instance(args.instance)
    tour, report = _solve_with(inst, args.algo, args)
    out = Path(args.out) if args.out else Path(args.instance).with_suffix(".tour")
    out.write_text(write_tour(inst.graph, tour))
    print(f"length {_fmt(report.length)}")
    print(f"tour written to {out}")
    return 0


def run_oracle(args) -> int:
    inst = _load_instance(args.instance)
    if args.problem == "phi":
        res = oracle_phi_opt(inst)
    elif args.problem == "tsp":
        res = oracle_tsp(inst.graph)
    else:
        phi = inst.interface
        if not (phi.size == 2 and phi.I == phi.T and len(phi.parts) == 1):
            print("error: instance interface is not of path shape (I = T = {s, t})", file=sys.stderr)
            return 1
        s, t = sorted(phi.I)
        res = oracle_path_tsp(inst.graph, s, t)
    if not res.feasible:
        print("infeasible")
        return 1
    print(f"optimum {_fmt(res.optimum)}")
    print(f"optima {res.count}")
    if args.witness:
        sys.stdout.write(write_tour(inst.graph, res.witness))
    return 0


def run_check(args) -> int:
    inst = _load_instance(args.instance)
    tour = parse_tour(Path(args.tour).read_text(), inst.graph)
    G, phi = inst.graph, inst.interface
    problems = []
    if G.odd_vertices(tour) != phi.T:
        got = sorted(G.odd_vertices(tour))
        problems.append(f"parity violation: odd(F) = {got}, expected {sorted(phi.T)}")
    rest = PhiInstance(G, phi)
    if not problems and not is_phi_tour(tour, rest):
        from .graphs import is_connected_contracted, multiset_components

        if not is_connected_contracted(G, tour, phi.I):
            problems.append("connectivity violation: (V,F)/I is disconnected")
        else:
            comps = multiset_components(G, tour)
            for part in phi.parts:
                if not any(part <= c for c in comps):
                    problems.append(f"partition violation: part {sorted(part)} is split")
    if problems:
        for p in problems:
            print(p)
        return 1
    print(f"valid tour, length {_fmt(G.multiset_length(tour))}")
    return 0


def run_gen(args) -> int:
    inst = gen_random(
        args.n,
        args.m,
        args.max_len,
        args.seed,
        args.mode,
        i_size=args.interface_size,
        t_size=args.t_size,
        parts=args.parts,
    )
    text = write_instance(inst)
    if args.out:
        Path(args.out).write_text(text)
        print(f"instance written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def run_bench(args) -> int:
    paths = sorted(Path(args.dir).glob("*.phi"))
    if not paths:
        print(f"error: no *.phi instances under {args.dir}", file=sys.stderr)
        return 1
    algos = args.algos.split(",") if args.algos else ["seven-approx", "boost"]
    rows = []
    for path in paths:
        inst = parse_instance(path.read_text())
        optimum = None
        if args.with_oracle:
            try:
                res = oracle_phi_opt(inst)
            except PhiTspError:
                res = None
            if res is not None and res.feasible:
                optimum = res.optimum
        for name in algos:
            tour, report = _solve_with(inst, name, args)
            if optimum is not None:
                report = report.with_optimum(optimum)
            rows.append(
                {
                    "instance": path.name,
                    "algorithm": name,
                    "epsilon": _fmt(report.epsilon),
                    "k": report.k,
                    "levels": report.levels,
                    "length": _fmt(report.length),
                    "optimum": _fmt(report.optimum),
                    "ratio": _fmt(report.ratio),
                    "valid": str(report.valid).lower(),
                    "millis": report.millis,
                }
            )
    rows.sort(key=lambda r: (r["instance"], r["algorithm"]))
    with open(args.out, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    print(f"{len(rows)} rows written to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="phitsp", description="Phi-TSP / Path-TSP toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance and write a tour file")
    p.add_argument("--instance", required=True)
    p.add_argument("--algo", default="boost", help=f"one of {('boost',) + phi_algorithm_ids()}")
    p.add_argument("--epsilon", type=_frac, default=Fraction(1))
    p.add_argument("--levels", type=int, default=1)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--base", default="seven-approx", help=f"one of {phi_algorithm_ids()}")
    p.add_argument("--tsp", default="christofides", help=f"one of {tsp_algorithm_ids()}")
    p.add_argument("--out", default=None)
    p.set_defaults(func=run_solve)

    p = sub.add_parser("oracle", help="exact optimum by exhaustive search")
    p.add_argument("--instance", required=True)
    p.add_argument("--problem", choices=["phi", "tsp", "path"], default="phi")
    p.add_argument("--witness", action="store_true", help="also print an optimal tour")
    p.set_defaults(func=run_oracle)

    p = sub.add_parser("check", help="validate a tour file against an instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--tour", required=True)
    p.set_defaults(func=run_check)

    p = sub.add_parser("gen", help="generate a random feasible instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-len", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["tsp", "path", "phi"], default="phi")
    p.add_argument("--interface-size", type=int, default=None)
    p.add_argument("--t-size", type=int, default=None)
    p.add_argument("--parts", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=run_gen)

    p = sub.add_parser("bench", help="sweep a directory of instances into a CSV")
    p.add_argument("--dir", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--with-oracle", action="store_true")
    p.add_argument("--algos", default=None, help="comma-separated algorithm ids")
    p.add_argument("--epsilon", type=_frac, default=Fraction(1))
    p.add_argument("--levels", type=int, default=1)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--base", default="seven-approx")
    p.add_argument("--tsp", default="christofides")
    p.set_defaults(func=run_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PhiTspError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
