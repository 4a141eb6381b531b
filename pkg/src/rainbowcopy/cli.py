"""Command-line frontend.

Subcommands: stats, threshold, certify, gen, find, oracle, experiment.
Exit codes: 0 success / certificate holds, 1 certificate fails, copy not
found, or budget spent, 2 usage or input format errors.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import lll
from .colouring import (
    boundedness,
    gen_k_bounded,
    gen_locally_k_bounded,
    load_colouring,
    save_colouring,
)
from .errors import CapacityError, DomainError, FormatError
from .events import DISJOINT, INTERSECTING, clique_cover_rainbow, proper_profile_from_rates
from .graph import cherry_stats, complete_graph, cycle_graph, falling_factorial, load_graph, path_graph
from .oracle import exists_copy
from .sampler import find_copy

__all__ = ["main", "build_parser"]


def _read_graph(path: str):
    return load_graph(Path(path).read_text(encoding="utf-8"))


def _read_colouring(path: str):
    return load_colouring(Path(path).read_text(encoding="utf-8"))


def _print_json(document: dict) -> None:
    print(json.dumps(document, indent=2, sort_keys=True))


def _cmd_stats(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    stats = cherry_stats(g)
    p = Fraction(stats.total_cherries, g.n_vertices)
    _print_json(
        {
            "n": g.n_vertices,
            "m": stats.edge_count,
            "max_degree": stats.max_degree,
            "total_cherries": stats.total_cherries,
            "p": str(p),
            "p_approx": float(p),
            "q": stats.max_cherries_per_vertex,
        }
    )
    return 0


def _cmd_threshold(args: argparse.Namespace) -> int:
    stats = cherry_stats(_read_graph(args.graph)) if args.graph else None
    k = lll.threshold(args.theorem, args.n, delta=args.delta, stats=stats)
    print(k)
    return 0


def _resolve_proper_rates(args: argparse.Namespace):
    if args.graph:
        stats = cherry_stats(_read_graph(args.graph))
        return Fraction(stats.max_cherries_per_vertex), Fraction(stats.total_cherries, args.n)
    if args.q is not None and args.p is not None:
        return Fraction(args.q), Fraction(args.p)
    if args.delta is not None:
        # worst case for maximum degree delta
        d2 = Fraction(args.delta * args.delta)
        return Fraction(3, 2) * d2, d2 / 2
    raise DomainError("proper mode needs --graph, or --q and --p, or --delta")


def _resolve_delta(args: argparse.Namespace) -> int:
    if args.delta is not None:
        return args.delta
    if args.graph:
        return cherry_stats(_read_graph(args.graph)).max_degree
    raise DomainError("rainbow mode needs --delta or --graph")


def _cmd_certify(args: argparse.Namespace) -> int:
    n, k = args.n, Fraction(args.k)
    if args.mode == "proper":
        q, p = _resolve_proper_rates(args)
        if args.search_mu:
            profile = proper_profile_from_rates(q, p, n, k)
            params, cert = lll.optimize_mu(Fraction(1, falling_factorial(n, 3)), profile)
            _print_json({"parameters": {key: str(v) for key, v in params.items()},
                         "certificate": cert.to_json()})
            return 0 if cert.holds else 1
        report = lll.verify_paper_inequalities("thm3", n=n, k=k, q=q, p=p)
    else:
        delta = _resolve_delta(args)
        if args.search_mu:
            profiles = {
                INTERSECTING: clique_cover_rainbow(delta, n, k, INTERSECTING),
                DISJOINT: clique_cover_rainbow(delta, n, k, DISJOINT),
            }
            p_by_class = {
                INTERSECTING: Fraction(1, falling_factorial(n, 3)),
                DISJOINT: Fraction(1, falling_factorial(n, 4)),
            }
            params, cert = lll.optimize_mu(p_by_class, profiles)
            _print_json({"parameters": {key: str(v) for key, v in params.items()},
                         "certificate": cert.to_json()})
            return 0 if cert.holds else 1
        report = lll.verify_paper_inequalities("thm7", n=n, k=k, delta=delta)
    report = dict(report)
    for key in ("k", "mu", "mu_int", "mu_dis", "q", "p"):
        if key in report:
            report[key] = str(report[key])
    _print_json(report)
    return 0 if report["ok"] else 1


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.mode == "global":
        colouring = gen_k_bounded(args.n, args.k, args.seed)
    else:
        colouring = gen_locally_k_bounded(args.n, args.k, args.seed)
    Path(args.output).write_text(save_colouring(colouring), encoding="utf-8")
    bounds = boundedness(colouring)
    _print_json(
        {
            "file": args.output,
            "n": args.n,
            "k": args.k,
            "mode": args.mode,
            "colours": len(colouring.colours_used()),
            "global_bound": bounds.global_bound,
            "local_bound": bounds.local_bound,
        }
    )
    return 0


def _cmd_find(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    colouring = _read_colouring(args.colouring)
    result = find_copy(
        g, colouring, args.mode, seed=args.seed, max_resamples=args.max_resamples
    )
    _print_json(result.to_json())
    return 0 if result.success else 1


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    colouring = _read_colouring(args.colouring)
    embedding = exists_copy(g, colouring, args.mode)
    if embedding is None:
        print("no valid embedding")
        return 1
    _print_json(embedding.to_json())
    return 0


def _derive_seed(master_seed: int, trial_id: int) -> int:
    digest = hashlib.sha256(f"{master_seed}:{trial_id}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


_FAMILIES = {"cycle": cycle_graph, "path": path_graph, "complete": complete_graph}


def _cmd_experiment(args: argparse.Namespace) -> int:
    spec = json.loads(Path(args.spec).read_text(encoding="utf-8"))
    mode = spec["mode"]
    colouring_kind = spec.get("colouring", "global")
    family = spec.get("graph_family", "cycle")
    if family not in _FAMILIES:
        raise DomainError(f"unknown graph family {family!r}")
    graph_size = spec.get("graph_size", "n")
    n_values = spec["n_values"]
    k_values = spec["k_values"]
    seeds_per_cell = int(spec.get("seeds_per_cell", 1))
    master_seed = int(spec.get("master_seed", 0))
    max_resamples = spec.get("max_resamples")

    rows = []
    trial_id = 0
    successes = 0
    for n in n_values:
        for k in k_values:
            size = n if graph_size == "n" else int(graph_size)
            g = _FAMILIES[family](size)
            delta = max(g.degrees, default=0)
            for _ in range(seeds_per_cell):
                seed = _derive_seed(master_seed, trial_id)
                gen = gen_k_bounded if colouring_kind == "global" else gen_locally_k_bounded
                colouring = gen(n, k, seed)
                start = time.perf_counter()
                result = find_copy(g, colouring, mode, seed=seed, max_resamples=max_resamples)
                elapsed_ms = int(1000 * (time.perf_counter() - start))
                outcome = "success" if result.success else "failure"
                successes += result.success
                rows.append(
                    [trial_id, n, delta, k, mode, seed, outcome, result.resamples, elapsed_ms]
                )
                trial_id += 1

    rows.sort(key=lambda row: row[0])
    with open(args.output, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["trial_id", "n", "delta", "k", "mode", "seed", "outcome", "resamples", "ms"])
        writer.writerows(rows)
    _print_json({"trials": trial_id, "successes": successes, "csv": args.output})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowcopy",
        description="Local-lemma certificates and randomized search for properly "
        "coloured and rainbow copies of graphs in edge-coloured complete graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stats", help="cherry statistics of a graph file")
    s.add_argument("--graph", required=True)
    s.set_defaults(func=_cmd_stats)

    s = sub.add_parser("threshold", help="largest admissible colour bound k")
    s.add_argument("--theorem", required=True, choices=lll.THEOREMS)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--graph")
    s.add_argument("--delta", type=int)
    s.set_defaults(func=_cmd_threshold)

    s = sub.add_parser("certify", help="check a local-lemma certificate")
    s.add_argument("--mode", required=True, choices=["proper", "rainbow"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--graph")
    s.add_argument("--delta", type=int)
    s.add_argument("--p")
    s.add_argument("--q")
    s.add_argument("--k", required=True, help="colour bound (integer or fraction)")
    group = s.add_mutually_exclusive_group()
    group.add_argument("--paper-mu", action="store_true", default=False,
                       help="use the fixed reference weights (default)")
    group.add_argument("--search-mu", action="store_true", default=False,
                       help="search the weights numerically")
    s.set_defaults(func=_cmd_certify)

    s = sub.add_parser("gen", help="generate a bounded colouring file")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--mode", required=True, choices=["global", "local"])
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=_cmd_gen)

    s = sub.add_parser("find", help="search a valid embedding by resampling")
    s.add_argument("--graph", required=True)
    s.add_argument("--colouring", required=True)
    s.add_argument("--mode", required=True, choices=["proper", "rainbow"])
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--max-resamples", type=int, default=None)
    s.set_defaults(func=_cmd_find)

    s = sub.add_parser("oracle", help="exact existence decision (small n)")
    s.add_argument("--graph", required=True)
    s.add_argument("--colouring", required=True)
    s.add_argument("--mode", required=True, choices=["proper", "rainbow"])
    s.set_defaults(func=_cmd_oracle)

    s = sub.add_parser("experiment", help="run a declarative trial batch to CSV")
    s.add_argument("--spec", required=True)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=_cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc!r}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
