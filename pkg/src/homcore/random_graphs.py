"""Sparse Erdos-Renyi sampling and Monte Carlo for k-cores and Hom(G, K_3) connectivity.

Every trial draws from its own generator seeded by ``(master_seed, trial_index)``
so results do not depend on execution order or parallelism.
"""
from __future__ import annotations

import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np
from scipy.stats import binomtest

from .graph import (Graph, PreconditionError, connected_components, count_cycles, degeneracy,
                    find_odd_cycle, fold_reduce, h1_graph, h2_graph, contains_subgraph, is_colorable,
                    k_core_vertices)
from .hom import BudgetExceeded, complete_graph, hom_components

# k-core thresholds for G(n, c/n); c_2 = 0 by convention, the rest are the
# published numerical values of Pittel, Spencer and Wormald.
CORE_THRESHOLDS = {2: 0.0, 3: 3.35, 4: 5.14, 5: 6.81}
CORE_THRESHOLD_SOURCE = "Pittel-Spencer-Wormald (1996), approximate values"

M3_CONNECTED = 0
M3_DISCONNECTED = -1
M3_EMPTY = -2
M3_UNKNOWN = None

CENSUS_MAX_LENGTH = 12


def core_threshold(k: int) -> float:
    """Tabulated c_k for k <= 5, else the leading terms k + sqrt(k log k)."""
    if k in CORE_THRESHOLDS:
        return CORE_THRESHOLDS[k]
    if k < 2:
        raise ValueError("thresholds are defined for k >= 2")
    return k + math.sqrt(k * math.log(k))


def chromatic_threshold_bounds(k: int) -> tuple[float, float]:
    """Leading-order (lower, upper) bounds on the k-colorability threshold, without o_k(1) terms."""
    base = 2 * k * math.log(k) - math.log(k)
    return base - 2 * math.log(2), base - 1


@dataclass(frozen=True)
class GnpConfig:
    n: int
    c: float
    trials: int = 100
    master_seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not self.c > 0:
            raise ValueError("c must be positive")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")

    @property
    def p(self) -> float:
        return min(1.0, self.c / self.n)


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=(trial_index,)))


def _pair_from_index(n: int, idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # pairs (i, j), i < j, listed row by row
    rows = np.arange(n, dtype=np.int64)
    starts = rows * (2 * n - rows - 1) // 2
    i = np.searchsorted(starts, idx, side="right") - 1
    j = idx - starts[i] + i + 1
    return i, j


def sample_gnp(n: int, p: float, rng=None) -> Graph:
    """G(n, p). Uses geometric gaps between chosen pairs when p is small."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = np.random.default_rng(rng)
    total = n * (n - 1) // 2
    if p == 0.0 or total == 0:
        return Graph(n)
    if p < 0.05:
        chunks, pos = [], -1
        expected = int(total * p + 10 * math.sqrt(total * p) + 16)
        while True:
            gaps = rng.geometric(p, size=expected)
            idx = pos + np.cumsum(gaps)
            chunks.append(idx[idx < total])
            if idx[-1] >= total:
                break
            pos = int(idx[-1])
        idx = np.concatenate(chunks)
        i, j = _pair_from_index(n, idx)
        edges = zip(i.tolist(), j.tolist())
    else:
        edges = []
        for i in range(n - 1):
            hits = np.nonzero(rng.random(n - 1 - i) < p)[0] + i + 1
            edges.extend((i, j) for j in hits.tolist())
    return Graph(n, edges)


# -- M(n, c, 3) classification ----------------------------------------------

def _classify_component(g: Graph, budget: int):
    n, m = g.n, g.m
    if n == 1 or m == n - 1:
        return M3_CONNECTED  # point or tree
    if m == n:
        # unicyclic: it folds onto its cycle, and only C_4 folds further
        return M3_CONNECTED if len(k_core_vertices(g, 2)) == 4 else M3_DISCONNECTED
    r = fold_reduce(g)
    if r.n == 2:
        return M3_CONNECTED
    if find_odd_cycle(r) is not None:
        return M3_DISCONNECTED if is_colorable(r, 3) else M3_EMPTY
    if all(len(a) == 2 for a in r.adjacency):
        return M3_DISCONNECTED  # a single even cycle of length >= 6
    if not contains_subgraph(r, h1_graph()) and not contains_subgraph(r, h2_graph()):
        return M3_DISCONNECTED
    try:
        comps = hom_components(r, complete_graph(3), budget)
    except BudgetExceeded:
        return M3_UNKNOWN
    return M3_CONNECTED if comps.count == 1 else M3_DISCONNECTED


def classify_m3(g: Graph, budget: int = 10**6):
    """Connectivity class of Hom(g, K_3): 0 connected, -1 disconnected,
    -2 empty, None when undecided within ``budget``."""
    classes = [_classify_component(g.induced_subgraph(c), budget) for c in connected_components(g)]
    if M3_EMPTY in classes:
        return M3_EMPTY
    if M3_DISCONNECTED in classes:
        return M3_DISCONNECTED
    if M3_UNKNOWN in classes:
        return M3_UNKNOWN
    return M3_CONNECTED


def exact_m3_class(g: Graph, budget: int = 10**7):
    """Classification straight from the 1-skeleton of Hom(g, K_3)."""
    comps = hom_components(g, complete_graph(3), budget)
    if not comps.maps:
        return M3_EMPTY
    return M3_CONNECTED if comps.count == 1 else M3_DISCONNECTED


def limit_probability_m3(c: float) -> float:
    """Limiting probability that Hom(G(n, c/n), K_3) is connected, for 0 < c < 1."""
    if not 0 < c < 1:
        raise ValueError("c must lie strictly between 0 and 1")
    return math.exp(0.5 * math.log1p(-c) + c / 2 + c**2 / 4 + c**4 / 8)


def poisson_cycle_mean(c: float, length: int) -> float:
    return c**length / (2 * length)


# -- experiments -------------------------------------------------------------

@dataclass
class TrialOutcome:
    trial_index: int
    degeneracy: int
    has_k_core: dict = field(default_factory=dict)
    m3_class: Optional[int] = None
    cycle_census: dict = field(default_factory=dict)
    edges: int = 0

    def to_json(self) -> str:
        d = asdict(self)
        d["has_k_core"] = {str(k): v for k, v in self.has_k_core.items()}
        d["cycle_census"] = {str(k): v for k, v in self.cycle_census.items()}
        d["m3_class"] = "unknown" if self.m3_class is None else self.m3_class
        return json.dumps(d, sort_keys=True)


def wilson_interval(successes: int, trials: int, confidence: float = 0.95) -> tuple[float, float]:
    ci = binomtest(successes, trials).proportion_ci(confidence_level=confidence, method="wilson")
    return float(ci.low), float(ci.high)


@dataclass
class ThresholdEstimate:
    config: GnpConfig
    kind: str
    outcomes: list
    summary: dict

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "config": asdict(self.config), **self.summary}, sort_keys=True)


def _core_trial(args):
    cfg, k, t = args
    g = sample_gnp(cfg.n, cfg.p, trial_rng(cfg.master_seed, t))
    d, _ = degeneracy(g)
    return TrialOutcome(t, d, {k: d >= k}, edges=g.m)


def _m3_trial(args):
    cfg, t = args
    g = sample_gnp(cfg.n, cfg.p, trial_rng(cfg.master_seed, t))
    d, _ = degeneracy(g)
    census = count_cycles(g, CENSUS_MAX_LENGTH)
    return TrialOutcome(t, d, {}, classify_m3(g), census, edges=g.m)


def _run(fn, jobs, workers):
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


def run_core_experiment(cfg: GnpConfig, k: int, workers: int = 0) -> ThresholdEstimate:
    """Fraction of trials whose sample has a nonempty k-core."""
    outcomes = _run(_core_trial, [(cfg, k, t) for t in range(cfg.trials)], workers)
    hits = sum(o.has_k_core[k] for o in outcomes)
    hist = Counter(o.degeneracy for o in outcomes)
    summary = {
        "k": k,
        "fraction": hits / cfg.trials,
        "interval": list(wilson_interval(hits, cfg.trials)),
        "degeneracy_histogram": {str(d): hist[d] for d in sorted(hist)},
        "threshold_c_k": core_threshold(k) if k >= 2 else None,
    }
    return ThresholdEstimate(cfg, "core", outcomes, summary)


def run_m3_experiment(cfg: GnpConfig, workers: int = 0) -> ThresholdEstimate:
    """Empirical Pr[M(n, c, 3) = 0] and = -1 against the limiting value."""
    if not 0 < cfg.c < 1:
        raise PreconditionError("the M(n, c, 3) experiment needs 0 < c < 1")
    outcomes = _run(_m3_trial, [(cfg, t) for t in range(cfg.trials)], workers)
    n0 = sum(o.m3_class == M3_CONNECTED for o in outcomes)
    n1 = sum(o.m3_class == M3_DISCONNECTED for o in outcomes)
    unknown = sum(o.m3_class is M3_UNKNOWN for o in outcomes)
    empty = sum(o.m3_class == M3_EMPTY for o in outcomes)
    lengths = range(3, CENSUS_MAX_LENGTH + 1)
    summary = {
        "p_connected": n0 / cfg.trials,
        "p_connected_interval": list(wilson_interval(n0, cfg.trials)),
        "p_disconnected": n1 / cfg.trials,
        "p_disconnected_interval": list(wilson_interval(n1, cfg.trials)),
        "unknown": unknown,
        "empty": empty,
        "theory_p_connected": limit_probability_m3(cfg.c),
        "cycle_census_mean": {str(l): sum(o.cycle_census[l] for o in outcomes) / cfg.trials for l in lengths},
        "cycle_poisson_mean": {str(l): poisson_cycle_mean(cfg.c, l) for l in lengths},
    }
    return ThresholdEstimate(cfg, "m3", outcomes, summary)
