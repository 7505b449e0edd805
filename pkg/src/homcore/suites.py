"""Exhaustive and Monte Carlo verification suites.

Each suite returns a :class:`SuiteResult` listing every counterexample found,
so a failing run reports the graph, parameters, expected and actual values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain, product
from typing import Callable, Optional

from .cycles import (CycleHom, bipartite_witness, cycle_coloring_components, interchange,
                     ladder_witness, odd_cycle_witness, return_number, witness_separates)
from .graph import (Graph, chromatic_number, complete_graph, connected_components, cycle_graph,
                    degeneracy, format_edge_list)
from .hom import BudgetExceeded, enumerate_cells, hom_components, verify_skeleton_extension
from .random_graphs import (GnpConfig, classify_m3, exact_m3_class, limit_probability_m3,
                            run_core_experiment, run_m3_experiment)
from .topology import DEFAULT_SIMPLEX_BUDGET, hom_betti, verify_degeneracy_bound


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def fail(self, **detail):
        self.failures.append(detail)

    def to_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "failures": self.failures, "notes": self.notes}


def small_graphs(max_n: int, min_n: int = 1, connected: bool = False) -> list[Graph]:
    """All graphs on ``min_n..max_n`` vertices up to isomorphism (max_n <= 7)."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas covers at most 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        k = h.number_of_nodes()
        if not min_n <= k <= max_n:
            continue
        g = Graph(k, h.edges())
        if connected and len(connected_components(g)) != 1:
            continue
        out.append(g)
    return out


def graphs_on_eight_vertices():
    """Every graph on 8 vertices up to isomorphism, with repeats.

    Deleting any vertex of an 8-vertex graph leaves a 7-vertex graph, so
    adding a vertex to each atlas graph in all 128 ways covers them all.
    """
    for g in small_graphs(7, min_n=7):
        base = g.edges()
        for s in range(128):
            yield Graph(8, base + [(7, i) for i in range(7) if s >> i & 1])


def _edges(g: Graph) -> str:
    return format_edge_list(g).strip()


def suite_degeneracy_bound(max_n: int = 5, ms=(3, 4)) -> SuiteResult:
    res = SuiteResult("thm2_8")
    for g in small_graphs(max_n, connected=True):
        for m in ms:
            res.checked += 1
            if not verify_degeneracy_bound(g, m):
                d, _ = degeneracy(g)
                res.fail(graph=_edges(g), m=m, expected=f">= {m - d - 2}-connected", got="violated")
    return res


def suite_odd_cycle(max_n: int = 6) -> SuiteResult:
    res = SuiteResult("thm4_1")
    k3 = complete_graph(3)
    for g in small_graphs(max_n, connected=True):
        if chromatic_number(g) != 3:
            continue
        res.checked += 1
        count = hom_components(g, k3).count
        if count < 2:
            res.fail(graph=_edges(g), m=3, expected=">= 2 components", got=count)
        w = odd_cycle_witness(g)
        if not witness_separates(g, w):
            res.fail(graph=_edges(g), expected="witness separated", got=w.to_dict())
    return res


def proper_cycle_colorings(n: int):
    for col in product((1, 2, 3), repeat=n):
        if all(col[i] != col[(i + 1) % n] for i in range(n)):
            yield col


def suite_interchange_identity(max_n: int = 12) -> SuiteResult:
    res = SuiteResult("lem4_6")
    for n in range(3, max_n + 1):
        for col in proper_cycle_colorings(n):
            r = return_number(CycleHom.of(col))
            for pair in ((1, 2), (1, 3), (2, 3)):
                res.checked += 1
                r2 = return_number(CycleHom.of(interchange(col, *pair)))
                if r + r2 != n:
                    res.fail(n=n, coloring=list(col), swap=list(pair), expected=n, got=r + r2)
    return res


def suite_return_invariance(max_n: int = 10) -> SuiteResult:
    res = SuiteResult("lem4_4")
    for n in range(3, max_n + 1):
        comps, returns = cycle_coloring_components(n)
        seen: dict[int, int] = {}
        for lab, r in zip(comps.labels, returns):
            res.checked += 1
            if seen.setdefault(lab, r) != r:
                res.fail(n=n, component=lab, expected=seen[lab], got=r)
    return res


def suite_skeleton_extension(max_n: int = 5, m: int = 4) -> SuiteResult:
    res = SuiteResult("lem3_3")
    for g in small_graphs(max_n):
        for v in range(g.n):
            res.checked += 1
            if not verify_skeleton_extension(g, v, m):
                res.fail(graph=_edges(g), vertex=v, m=m, expected=True, got=False)
    return res


def _attach(base: Graph, extra_edges, extra_vertices: int) -> Graph:
    return Graph(base.n + extra_vertices, base.edges() + list(extra_edges))


def witness_fixtures() -> dict[str, Graph]:
    """Bipartite graphs meeting the hypotheses of the extension construction."""
    c6, c8, c10 = cycle_graph(6), cycle_graph(8), cycle_graph(10)
    return {
        "C6": c6,
        "C8": c8,
        "C10": c10,
        "C6+pendant_path2": _attach(c6, [(0, 6), (6, 7)], 2),
        "C6+pendant_tree": _attach(c6, [(0, 6), (6, 7), (6, 8), (3, 9)], 4),
        "C8+pendant_tree": _attach(c8, [(0, 8), (8, 9), (9, 10), (4, 11)], 4),
        "C6+pendant_vertex": _attach(c6, [(2, 6)], 1),
        "C6+attach_v1v3": _attach(c6, [(0, 6), (2, 6)], 1),
        "C8+attach_v2v4": _attach(c8, [(1, 8), (3, 8)], 1),
        "C8+attach_v1v3+tail": _attach(c8, [(0, 8), (2, 8), (8, 9)], 2),
        "C10+attach_v1v3": _attach(c10, [(0, 10), (2, 10)], 1),
        "C6+theta": _attach(c6, [(0, 6), (6, 7), (7, 3)], 2),
    }


def suite_bipartite_witness(exhaustive_max_n: Optional[int] = 7) -> SuiteResult:
    from .cycles import check_bipartite_witness_preconditions
    from .graph import PreconditionError

    res = SuiteResult("thm4_7")
    graphs = list(witness_fixtures().items())
    if exhaustive_max_n:
        for g in small_graphs(exhaustive_max_n, min_n=6, connected=True):
            try:
                check_bipartite_witness_preconditions(g)
            except PreconditionError:
                continue
            graphs.append((_edges(g), g))
    for name, g in graphs:
        res.checked += 1
        try:
            w = bipartite_witness(g)
        except Exception as exc:  # any failure here is a counterexample to report
            res.fail(graph=name, expected="witness", got=f"{type(exc).__name__}: {exc}")
            continue
        if not witness_separates(g, w):
            res.fail(graph=name, expected="separated colorings", got=w.to_dict())
    g, w = ladder_witness()
    res.checked += 1
    if return_number(w.tau_restriction) != 0 or not witness_separates(g, w):
        res.fail(graph="ladder6", expected="separated colorings with r(tau)=0", got=w.to_dict())
    return res


def suite_cycle_table(m: int = 4, odd=(3, 5, 7), even=(6, 8), skippable=(8,),
                      simplex_budget: int = DEFAULT_SIMPLEX_BUDGET, max_n: Optional[int] = None) -> SuiteResult:
    """Betti pattern of Hom(C_n, K_m): odd cycles connected with nonzero b1,
    even cycles with b1 = 0 and b2 nonzero.

    Cycle lengths in ``skippable`` may be skipped when the subdivision budget
    is exceeded; the skip is recorded in ``notes``.
    """
    res = SuiteResult("cycle_table")
    km = complete_graph(m)
    for n in sorted(odd + even):
        if max_n is not None and n > max_n:
            continue
        top = 1 if n in odd else 2
        c = enumerate_cells(cycle_graph(n), km, max_dim=top + 1)
        betti: list = []
        try:
            for q in range(top + 1):
                betti = hom_betti(c, q, simplex_budget)
        except BudgetExceeded as exc:
            if n not in skippable:
                raise
            res.notes.append({"n": n, "m": m, "skipped": str(exc), "betti_so_far": betti})
            continue
        res.checked += 1
        res.notes.append({"n": n, "m": m, "betti": betti})
        if n in odd:
            ok = betti[0] == 0 and betti[1] != 0
            want = "b0 = 0 and b1 != 0"
        else:
            ok = betti[1] == 0 and betti[2] != 0
            want = "b1 = 0 and b2 != 0"
        if not ok:
            res.fail(graph=f"C{n}", m=m, expected=want, got=betti)
    return res


def suite_m3_limit(n: int = 1000, trials: int = 300, cs=(0.3, 0.5, 0.8), seed: int = 20240611,
                 tolerance: float = 0.06) -> SuiteResult:
    res = SuiteResult("thm5_4")
    for c in cs:
        est = run_m3_experiment(GnpConfig(n, c, trials, seed))
        emp, theory = est.summary["p_connected"], limit_probability_m3(c)
        res.checked += 1
        res.notes.append({"c": c, "empirical": emp, "theory": theory, "unknown": est.summary["unknown"]})
        if abs(emp - theory) > tolerance:
            res.fail(c=c, expected=f"{theory:.4f} +/- {tolerance}", got=emp)
    return res


def suite_core_threshold(n: int = 20000, trials: int = 20, seed: int = 20240611) -> SuiteResult:
    res = SuiteResult("core3")
    for c, ok, want in ((3.0, lambda f: f <= 0.1, "<= 0.1"), (3.7, lambda f: f >= 0.9, ">= 0.9")):
        frac = run_core_experiment(GnpConfig(n, c, trials, seed), 3).summary["fraction"]
        res.checked += 1
        res.notes.append({"c": c, "fraction": frac})
        if not ok(frac):
            res.fail(c=c, expected=want, got=frac)
    return res


def suite_classify_m3(max_n: int = 8) -> SuiteResult:
    """Fast M(n, c, 3) classification against the exact 1-skeleton computation."""
    res = SuiteResult("classify_m3")
    graphs = small_graphs(min(max_n, 7))
    if max_n >= 8:
        graphs = chain(graphs, graphs_on_eight_vertices())
    for g in graphs:
        res.checked += 1
        fast, exact = classify_m3(g), exact_m3_class(g)
        if fast != exact:
            res.fail(graph=_edges(g), expected=exact, got=fast)
    return res


# Suite ids are fixed by the command-line interface.
SUITES: dict[str, Callable[..., SuiteResult]] = {
    "thm2_8": suite_degeneracy_bound,
    "thm4_1": suite_odd_cycle,
    "thm4_7": suite_bipartite_witness,
    "lem3_3": suite_skeleton_extension,
    "lem4_4": suite_return_invariance,
    "lem4_6": suite_interchange_identity,
    "thm5_4": suite_m3_limit,
    "core3": suite_core_threshold,
    "classify_m3": suite_classify_m3,
    "cycle_table": suite_cycle_table,
}
