"""Command-line front end.

Every command prints a single JSON document with sorted keys on stdout.
Exit codes: 0 success, 1 suite failure, 2 resource budget exceeded,
3 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .graph import (GraphFormatError, PreconditionError, chromatic_number, contains_subgraph,
                    degeneracy, fold_reduce, h1_graph, h2_graph, is_bipartite, k_core_vertices,
                    load_edge_list, named_graph)
from .hom import DEFAULT_BUDGET, BudgetExceeded, cell_counts, complete_graph, hom_components, enumerate_cells
from .random_graphs import (GnpConfig, chromatic_threshold_bounds, core_threshold,
                            limit_probability_m3, run_core_experiment, run_m3_experiment,
                            CORE_THRESHOLDS, CORE_THRESHOLD_SOURCE)
from .suites import SUITES
from .topology import DEFAULT_SIMPLEX_BUDGET, EMPTY, hom_betti, homological_connectivity

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def _load(args):
    if bool(args.input) == bool(args.named):
        raise UsageError("give exactly one of --input or --named")
    return load_edge_list(args.input) if args.input else named_graph(args.named)


def _need_m(args) -> int:
    if args.m is None or args.m < 1:
        raise UsageError("--m must be a positive integer")
    return args.m


def cmd_graph(args) -> tuple[int, dict]:
    g = _load(args)
    d, order = degeneracy(g)
    red = fold_reduce(g)
    report = {
        "n": g.n,
        "m": g.m,
        "degrees": [len(a) for a in g.adjacency],
        "degeneracy": d,
        "degeneracy_ordering": order,
        "k_core_sizes": {str(k): len(k_core_vertices(g, k)) for k in range(d + 1)},
        "bipartite": is_bipartite(g) is not None,
        "chi": chromatic_number(g),
        "fold_reduced_n": red.n,
        "fold_reduced_m": red.m,
        "contains_h1": contains_subgraph(g, h1_graph()),
        "contains_h2": contains_subgraph(g, h2_graph()),
    }
    return EXIT_OK, report


def _betti_report(g, m, budget, simplex_budget, max_dim=None) -> dict:
    km = complete_graph(m)
    c = enumerate_cells(g, km, None if max_dim is None else max_dim + 1, budget)
    betti = hom_betti(c, max_dim, simplex_budget)
    conn = homological_connectivity(c, None, simplex_budget) if max_dim is None else None
    return {"m": m, "betti_reduced_mod2": betti, "through_dim": len(betti) - 1,
            "connectivity": _jsonable(conn) if conn is not None else None,
            "empty": c.is_empty()}


def cmd_hom(args) -> tuple[int, dict]:
    g, m = _load(args), _need_m(args)
    km = complete_graph(m)
    if args.mode == "components":
        comps = hom_components(g, km, args.budget)
        sizes = sorted(comps.sizes(), reverse=True)
        return EXIT_OK, {"m": m, "maps": len(comps.maps), "components": comps.count,
                         "sizes": sizes, "singletons": sizes.count(1)}
    if args.mode == "cells":
        counts = cell_counts(g, km, args.max_dim, args.budget)
        return EXIT_OK, {"m": m, "cells_by_dim": counts, "total": sum(counts)}
    return EXIT_OK, _betti_report(g, m, args.budget, args.simplex_budget, args.max_dim)


def cmd_betti(args) -> tuple[int, dict]:
    g, m = _load(args), _need_m(args)
    return EXIT_OK, _betti_report(g, m, args.budget, args.simplex_budget, args.max_dim)


def cmd_verify(args) -> tuple[int, dict]:
    fn = SUITES[args.suite]
    kwargs = {}
    if args.max_n is not None:
        if args.suite in ("thm5_4", "core3"):
            raise UsageError("--max-n does not apply to Monte Carlo suites; use --n")
        kwargs["exhaustive_max_n" if args.suite == "thm4_7" else "max_n"] = args.max_n
    if args.suite in ("thm5_4", "core3"):
        for key in ("n", "trials", "seed"):
            val = getattr(args, key)
            if val is not None:
                kwargs[key] = val
        if args.c is not None and args.suite == "thm5_4":
            kwargs["cs"] = (args.c,)
    res = fn(**kwargs)
    return (EXIT_OK if res.passed else EXIT_FAIL), res.to_dict()


def cmd_random(args) -> tuple[int, dict]:
    if args.n is None or args.c is None:
        raise UsageError("--n and --c are required")
    trials = args.trials if args.trials is not None else 100
    seed = args.seed if args.seed is not None else 0
    if args.kind == "m3" and not 0 < args.c < 1:
        raise UsageError("the m3 experiment needs 0 < c < 1")
    cfg = GnpConfig(args.n, args.c, trials, seed)
    if args.kind == "core":
        k = args.k if args.k is not None else 3
        est = run_core_experiment(cfg, k, args.workers)
        theory = {"threshold_table": {str(j): v for j, v in CORE_THRESHOLDS.items()},
                  "threshold_source": CORE_THRESHOLD_SOURCE,
                  "c_k": core_threshold(k) if k >= 2 else None}
    else:
        est = run_m3_experiment(cfg, args.workers)
        lo, hi = chromatic_threshold_bounds(3)
        theory = {"limit_p_connected": limit_probability_m3(args.c),
                  "chromatic_threshold_bounds_k3": [lo, hi]}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for o in est.outcomes:
                fh.write(o.to_json() + "\n")
    summary = json.loads(est.to_json())
    summary["theory"] = theory
    return EXIT_OK, summary


def _flat_csv(report: dict) -> str:
    rows = []

    def walk(prefix, val):
        if isinstance(val, dict):
            for k in sorted(val):
                walk(f"{prefix}.{k}" if prefix else k, val[k])
        elif isinstance(val, list) and all(not isinstance(v, (dict, list)) for v in val):
            rows.append((prefix, " ".join(str(v) for v in val)))
        elif isinstance(val, list):
            rows.append((prefix, json.dumps(val, sort_keys=True)))
        else:
            rows.append((prefix, val))

    walk("", report)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    w.writerows(rows)
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="edge-list file: 'n m' then m lines 'u v'")
    common.add_argument("--named", help="graph keyword, e.g. k4, c6, q3, ladder6, h1, h2, kij:3,5")
    common.add_argument("--m", type=int, help="size of the complete target graph K_m")
    common.add_argument("--k", type=int, help="core order for random core experiments")
    common.add_argument("--n", type=int, help="vertex count for random experiments")
    common.add_argument("--c", type=float, help="edge density constant, p = c/n")
    common.add_argument("--trials", type=int)
    common.add_argument("--seed", type=int, help="master seed (unsigned 64-bit)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cell enumeration budget")
    common.add_argument("--simplex-budget", type=int, default=DEFAULT_SIMPLEX_BUDGET,
                        help="largest barycentric subdivision to build")
    common.add_argument("--max-dim", type=int, help="highest homology or cell dimension to report")
    common.add_argument("--max-n", type=int, help="largest graph order in exhaustive suites")
    common.add_argument("--workers", type=int, default=0, help="worker processes for trials")
    common.add_argument("--out", help="write per-trial JSON lines here")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    p = _Parser(prog="homcore", description="Hom complexes into complete graphs, k-cores and random graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("graph", parents=[common], help="structural report for one graph")
    hp = sub.add_parser("hom", parents=[common], help="components, Betti numbers or cell counts of Hom(G, K_m)")
    hp.add_argument("--mode", choices=("components", "betti", "cells"), default="components")
    sub.add_parser("betti", parents=[common], help="reduced mod-2 Betti numbers of Hom(G, K_m)")
    vp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    vp.add_argument("suite", choices=sorted(SUITES))
    rp = sub.add_parser("random", parents=[common], help="Monte Carlo on G(n, c/n)")
    rp.add_argument("kind", choices=("core", "m3"))
    return p


COMMANDS = {"graph": cmd_graph, "hom": cmd_hom, "betti": cmd_betti, "verify": cmd_verify, "random": cmd_random}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, report = COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GraphFormatError as exc:
        line = f" (line {exc.lineno})" if getattr(exc, "lineno", None) else ""
        print(f"parse error{line}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "csv":
        sys.stdout.write(_flat_csv(report))
    else:
        sys.stdout.write(_dump(report) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
