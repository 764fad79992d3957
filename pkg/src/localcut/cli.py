"""Command-line surface for the cut-synthesis and simulation pipelines.

Seven subcommands cover the full workflow: build the weighted neighbourhood
graph, search it for maximum cuts, export it as a MaxSAT instance, sweep
threshold performance across degrees, verify the lower-bound inequalities,
run the distributed algorithms on concrete graphs, and generate test graphs.

Conventions shared by every subcommand:
  * the default seed is the constant 0xC0FFEE; pass --entropy for a fresh
    OS-entropy seed (printed to stderr so the run can be reproduced);
  * no environment variables are read;
  * like counts use the equality convention: a neighbour u of v is
    like-minded when c(u) == c(v);
  * exit codes: 0 success, 1 a checked inequality failed or a sampling
    budget was exhausted, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import List, Optional, TextIO

from . import analysis, cutsearch, ngraph, sim

DEFAULT_SEED = 0xC0FFEE
DEFAULT_TRIALS = 10_000


def _rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_degree_range(text: str) -> List[int]:
    """`a` or `a..b` (inclusive), degrees >= 2."""
    parts = text.split("..")
    if len(parts) == 1:
        lo = hi = int(parts[0])
    elif len(parts) == 2:
        lo, hi = int(parts[0]), int(parts[1])
    else:
        raise ValueError(f"expected 'a' or 'a..b', got {text!r}")
    if lo < 2:
        raise ValueError(f"degrees start at 2, got {lo}")
    if hi < lo:
        raise ValueError(f"empty degree range {text!r}")
    return list(range(lo, hi + 1))


@contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _resolve_seed(args: argparse.Namespace) -> int:
    if getattr(args, "entropy", False):
        seed = secrets.randbits(64)
        print(f"entropy seed: {seed}", file=sys.stderr)
        return seed
    return args.seed


# ---------------------------------------------------------------------------
# Subcommands


def cmd_build_ngraph(args: argparse.Namespace) -> int:
    g = ngraph.build_ngraph(args.d)
    with _output(args.out) as fh:
        if args.format == "text":
            ngraph.write_ngraph_table(fh, g)
        elif args.format == "csv":
            fh.write("side1,i1,side2,i2,num,den\n")
            for n1 in g.nodes:
                for n2 in g.nodes:
                    w = g.weight(n1, n2)
                    fh.write(
                        f"{n1.side},{n1.like_count},{n2.side},{n2.like_count},"
                        f"{w.numerator},{w.denominator}\n"
                    )
        else:
            doc = {
                "d": g.degree,
                "nodes": [[n.side, n.like_count] for n in g.nodes],
                "weights": [
                    {
                        "n1": [n1.side, n1.like_count],
                        "n2": [n2.side, n2.like_count],
                        "weight": _rational(g.weight(n1, n2)),
                    }
                    for n1 in g.nodes
                    for n2 in g.nodes
                ],
                "normalisation": _rational(g.total_weight()),
            }
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    degrees = _parse_degree_range(args.d)
    over = [d for d in degrees if d > cutsearch.BRUTE_FORCE_MAX_DEGREE]
    if over:
        print(
            f"error: exhaustive search is capped at d = "
            f"{cutsearch.BRUTE_FORCE_MAX_DEGREE} (asked for d = {over[0]}); "
            "use the export-wcnf subcommand and an external MaxSAT solver",
            file=sys.stderr,
        )
        return 2
    rows = []
    for d in degrees:
        g = ngraph.build_ngraph(d)
        labels, weight = cutsearch.brute_force_max_cut(g)
        rows.append((d, cutsearch.matching_threshold(g, labels), weight))
    with _output(args.out) as fh:
        if args.format == "csv":
            fh.write("d,tau,weight_num,weight_den,weight_float\n")
            for d, tau, w in rows:
                tau_s = "" if tau is None else str(tau)
                fh.write(
                    f"{d},{tau_s},{w.numerator},{w.denominator},{float(w):.15g}\n"
                )
        elif args.format == "json":
            json.dump(
                [
                    {
                        "d": d,
                        "tau": tau,
                        "weight": _rational(w),
                        "weight_float": float(w),
                    }
                    for d, tau, w in rows
                ],
                fh,
                indent=2,
            )
            fh.write("\n")
        else:
            fh.write("d tau weight weight_float\n")
            for d, tau, w in rows:
                tau_s = "-" if tau is None else str(tau)
                fh.write(f"{d} {tau_s} {_rational(w)} {float(w):.15g}\n")
    return 0


def cmd_export_wcnf(args: argparse.Namespace) -> int:
    doc = cutsearch.export_wcnf(ngraph.build_ngraph(args.d))
    with _output(args.out) as fh:
        fh.write(cutsearch.format_wcnf(doc))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    degrees = _parse_degree_range(args.d)
    with _output(args.out) as fh:
        if args.opt:
            ties = analysis.write_tau_opt_csv(fh, degrees)
            for d, taus in ties:
                print(
                    f"warning: d={d} has tied optimal thresholds {taus}; "
                    "reporting the smallest",
                    file=sys.stderr,
                )
        else:
            for d in degrees:
                analysis.write_alpha_sweep_csv(fh, d, header=(d == degrees[0]))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.bound == (args.appendix is not None):
        print(
            "error: pass exactly one of --bound or --appendix", file=sys.stderr
        )
        return 2
    with _output(args.out) as fh:
        if args.bound:
            report = analysis.verify_theorem_bound(args.dmax)
            json.dump(analysis.bound_report_json(report), fh, indent=2)
            fh.write("\n")
            return 0 if report.all_pass else 1
        ns = [int(x) for x in args.appendix.split(",") if x]
        report = analysis.verify_appendix_estimates(
            ns, precision_cap=args.precision_cap
        )
        json.dump(analysis.appendix_report_json(report), fh, indent=2)
        fh.write("\n")
        return 0 if report.all_hold and report.conclusive else 1


def _build_graph(args: argparse.Namespace, seed: int) -> sim.RegularGraph:
    family = args.family
    if family == "bipartite":
        if args.n is None or args.d is None:
            raise ValueError("family bipartite needs --n (per side) and --d")
        return sim.random_bipartite_regular(args.n, args.d, seed)
    if family == "triangle-free":
        if args.n is None or args.d is None:
            raise ValueError("family triangle-free needs --n and --d")
        return sim.random_triangle_free(args.n, args.d, seed)
    if family == "file":
        if args.infile is None:
            raise ValueError("family file needs --in <edge list path>")
        with open(args.infile) as fh:
            return sim.read_edge_list(fh)
    return sim.gen_fixed(family, d=args.d, n=args.n)


def _build_algorithm(args: argparse.Namespace, g: sim.RegularGraph):
    if args.alg == "uniform":
        return sim.UniformCut()
    tau = args.tau
    if tau is None and args.alg in ("threshold", "virtual"):
        tau = analysis.optimal_tau(g.degree)[0]
        print(f"using optimal tau = {tau} for d = {g.degree}", file=sys.stderr)
    if args.alg == "threshold":
        return sim.ThresholdCut(tau)
    if args.alg == "shearer":
        return sim.ShearerCut()
    if args.alg == "virtual":
        return sim.VirtualNeighbourCut(g.degree, tau)
    raise ValueError(f"unknown algorithm {args.alg!r}")


def cmd_simulate(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args)
    g = _build_graph(args, seed)
    alg = _build_algorithm(args, g)
    stats = sim.monte_carlo(g, alg, args.trials, seed, per_edge=args.per_edge)
    with _output(args.out) as fh:
        if args.format == "json":
            json.dump(sim.trial_stats_jsonable(stats), fh, indent=2)
            fh.write("\n")
        elif args.format == "csv":
            sim.write_trial_stats_csv(fh, stats)
        else:
            fh.write(
                f"trials={stats.trials} mean={stats.mean:.15g} "
                f"stderr={stats.stderr:.15g} seed={stats.seed} "
                f"edge_count={stats.edge_count}\n"
            )
            if stats.flagged_edge_mean is not None:
                fh.write(
                    f"clean_edge_mean={stats.clean_edge_mean:.15g} "
                    f"flagged_edge_mean={stats.flagged_edge_mean:.15g} "
                    f"flagged_edge_fraction={stats.flagged_edge_fraction:.15g}\n"
                )
            if stats.per_edge is not None:
                for (u, v), c in stats.per_edge.items():
                    fh.write(f"edge {u} {v} {c} {c / stats.trials:.15g}\n")
    return 0


def cmd_gen_graph(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args)
    g = _build_graph(args, seed)
    with _output(args.out) as fh:
        sim.write_edge_list(fh, g)
    return 0


# ---------------------------------------------------------------------------
# Parser


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="localcut",
        description=(
            "Synthesise, analyse, and simulate one-round distributed cut "
            "algorithms on triangle-free regular graphs."
        ),
        epilog=(
            "Like counts everywhere use the equality convention (a neighbour "
            "is like-minded when it holds the same side). The default seed "
            f"is {DEFAULT_SEED:#x}; no environment variables are read. "
            "Exit codes: 0 ok, 1 verification/sampling failure, 2 usage."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")

    def add_seed(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--seed",
            type=int,
            default=DEFAULT_SEED,
            help=f"master seed (default {DEFAULT_SEED:#x})",
        )
        p.add_argument(
            "--entropy",
            action="store_true",
            help="draw the seed from OS entropy and print it to stderr",
        )

    p = sub.add_parser(
        "build-ngraph", help="emit the weighted neighbourhood graph for degree d"
    )
    p.add_argument("--d", type=int, required=True, help="degree, at least 2")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    add_out(p)
    p.set_defaults(func=cmd_build_ngraph)

    p = sub.add_parser(
        "solve",
        help=(
            "exhaustive maximum cut of the neighbourhood graph "
            f"(d up to {cutsearch.BRUTE_FORCE_MAX_DEGREE})"
        ),
    )
    p.add_argument("--d", required=True, help="degree or inclusive range a..b")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    add_out(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser(
        "export-wcnf",
        help="emit the neighbourhood max-cut instance in weighted DIMACS CNF",
    )
    p.add_argument("--d", type=int, required=True, help="degree, at least 2")
    add_out(p)
    p.set_defaults(func=cmd_export_wcnf)

    p = sub.add_parser(
        "sweep",
        help="CSV of threshold performance: per-tau values, or per-degree optima",
    )
    p.add_argument("--d", required=True, help="degree or inclusive range a..b")
    p.add_argument(
        "--opt",
        action="store_true",
        help="one row per degree with the optimal and formula thresholds",
    )
    add_out(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser(
        "verify", help="check the proven lower-bound inequalities, JSON report"
    )
    p.add_argument(
        "--bound",
        action="store_true",
        help="integer comparison of alpha(tau(d), d) against 1/2 + 9/(32 sqrt(d))",
    )
    p.add_argument("--dmax", type=int, default=3000, help="largest degree checked")
    p.add_argument(
        "--appendix",
        metavar="N_LIST",
        help="certified tail estimates at these comma-separated n (each >= 1500)",
    )
    p.add_argument(
        "--precision-cap",
        type=int,
        default=4096,
        help="interval-arithmetic precision ceiling for --appendix",
    )
    add_out(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "simulate", help="Monte Carlo run of a one-round algorithm on a graph"
    )
    p.add_argument(
        "--family",
        required=True,
        choices=(
            "kdd", "cycle", "hypercube", "petersen",
            "bipartite", "triangle-free", "file",
        ),
    )
    p.add_argument("--d", type=int, help="degree / dimension where the family needs it")
    p.add_argument("--n", type=int, help="size parameter where the family needs it")
    p.add_argument("--in", dest="infile", metavar="PATH", help="edge list for --family file")
    p.add_argument(
        "--alg",
        required=True,
        choices=("uniform", "threshold", "shearer", "virtual"),
    )
    p.add_argument(
        "--tau",
        type=int,
        help="threshold; defaults to the exact optimum for the graph's degree",
    )
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    add_seed(p)
    p.add_argument(
        "--per-edge", action="store_true", help="include per-edge cut counts"
    )
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    add_out(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("gen-graph", help="generate a graph and emit its edge list")
    p.add_argument(
        "--family",
        required=True,
        choices=(
            "kdd", "cycle", "hypercube", "petersen", "bipartite", "triangle-free",
        ),
    )
    p.add_argument("--d", type=int, help="degree / dimension where the family needs it")
    p.add_argument("--n", type=int, help="size parameter where the family needs it")
    add_seed(p)
    add_out(p)
    p.set_defaults(func=cmd_gen_graph)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
