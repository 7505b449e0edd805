"""Return numbers, color-class interchanges and disconnection witnesses for Hom(G, K_3).

Colors here are the labels ``1..m`` (target vertex ``a`` of K_m is color
``a + 1``), matching the usual way colorings of cycles are written down.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import (Graph, PreconditionError, chromatic_number, circular_ladder_graph,
                    connected_components, contains_subgraph, cycle_graph, distances_from,
                    find_odd_cycle, folds_to_edge, h1_graph, h2_graph, is_bipartite,
                    minimal_long_even_cycle)
from .hom import complete_graph, enumerate_0cells, hom_components


class InvariantViolation(RuntimeError):
    """A construction produced output that fails its own validation."""


@dataclass(frozen=True)
class CycleHom:
    """A homomorphism C_n -> C_m given by its labels on v_1..v_n."""

    n: int
    m: int
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.n:
            raise ValueError(f"image has {len(self.image)} labels for a cycle of length {self.n}")
        if any(not (1 <= x <= self.m) for x in self.image):
            raise ValueError(f"labels must lie in 1..{self.m}")
        for i in range(self.n):
            step = (self.image[(i + 1) % self.n] - self.image[i]) % self.m
            if step not in (1, self.m - 1):
                raise ValueError(f"v{i + 1} -> v{(i + 1) % self.n + 1} is not an edge of C_{self.m}")

    @classmethod
    def of(cls, image: Sequence[int], m: int = 3) -> "CycleHom":
        return cls(len(image), m, tuple(image))


def return_number(h: CycleHom) -> int:
    """Number of indices i where the image steps by -1 mod m."""
    return sum(1 for i in range(h.n) if (h.image[(i + 1) % h.n] - h.image[i]) % h.m == h.m - 1)


def interchange(coloring: Sequence[int], l: int, j: int) -> tuple[int, ...]:
    """Swap the color classes ``l`` and ``j``."""
    if l == j:
        raise ValueError("interchange needs two distinct colors")
    swap = {l: j, j: l}
    return tuple(swap.get(c, c) for c in coloring)


def tau_pattern(k: int) -> CycleHom:
    """The coloring j -> j mod 3 of C_{2k}, with the last one or two labels
    patched so the pattern closes up; its return number is at most 2."""
    if k < 3:
        raise ValueError("tau_pattern needs k >= 3")
    n = 2 * k
    image = [(j - 1) % 3 + 1 for j in range(1, n + 1)]
    rem = n % 3
    if rem == 1:
        image[n - 1] = 2
    elif rem == 2:
        image[n - 2], image[n - 1] = 1, 2
    return CycleHom(n, 3, tuple(image))


@dataclass
class DisconnectionWitness:
    """Two 3-colorings in different components of Hom(G, K_3), with the cycle
    whose return numbers separate them."""

    eta: tuple[int, ...]
    eta_swapped: tuple[int, ...]
    swap_pair: tuple[int, int]
    cycle: tuple[int, ...]
    tau_restriction: CycleHom

    def to_dict(self) -> dict:
        return {"eta": list(self.eta), "eta_swapped": list(self.eta_swapped),
                "swap": list(self.swap_pair), "cycle": list(self.cycle),
                "tau": list(self.tau_restriction.image)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def is_proper_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    return len(coloring) == g.n and all(coloring[u] != coloring[v] for u, v in g.edges())


def _witness(eta, cycle, pair=(1, 2)) -> DisconnectionWitness:
    tau = CycleHom.of([eta[v] for v in cycle])
    return DisconnectionWitness(tuple(eta), interchange(eta, *pair), tuple(pair), tuple(cycle), tau)


def odd_cycle_witness(g: Graph, pair=(1, 2)) -> DisconnectionWitness:
    """Any 3-coloring and its interchange, separated along an odd cycle."""
    chi = chromatic_number(g)
    if chi != 3:
        raise PreconditionError(f"odd_cycle_witness needs chromatic number 3, got {chi}")
    eta = [a + 1 for a in enumerate_0cells(g, complete_graph(3))[0]]
    return _witness(eta, find_odd_cycle(g), pair)


def check_bipartite_witness_preconditions(g: Graph) -> None:
    if g.n == 0 or len(connected_components(g)) != 1:
        raise PreconditionError("graph must be nonempty and connected")
    if is_bipartite(g) is None:
        raise PreconditionError("graph must be bipartite")
    if g.m == 0 or folds_to_edge(g):
        raise PreconditionError("graph folds to an edge")
    if contains_subgraph(g, h1_graph()):
        raise PreconditionError("graph contains H1")
    if contains_subgraph(g, h2_graph()):
        raise PreconditionError("graph contains H2")


def bipartite_witness(g: Graph, pair=(1, 2)) -> DisconnectionWitness:
    """Extend the pattern coloring of a minimal long even cycle to all of ``g``.

    ``g`` must be connected, bipartite, not fold to an edge, and avoid H1 and
    H2. Away from the cycle the coloring is the bipartition, except on
    vertices attached to the cycle whose bipartition color clashes with it;
    those get color 3, or are flipped within {1, 2} with their outer
    neighbours moved to 3. The result is validated before it is returned.
    """
    check_bipartite_witness_preconditions(g)
    cycle = minimal_long_even_cycle(g)
    if cycle is None:
        raise PreconditionError("no cycle of length at least 6")
    k = len(cycle) // 2
    tau_img = tau_pattern(k).image
    tau = {v: tau_img[i] for i, v in enumerate(cycle)}
    on_cycle = set(cycle)
    sigma = is_bipartite(g)
    adj = g.adjacency

    dist = distances_from(g, cycle)
    layer1 = {u for u in range(g.n) if dist[u] == 1}
    clash = {u for u in layer1 if any(sigma[u] == tau[v] for v in adj[u] & on_cycle)}

    def kind(u):
        return len(adj[u] & on_cycle), len(adj[u] & clash)

    flipped = {u for u in clash
               if (kind(u) == (2, 0) and {tau[v] for v in adj[u] & on_cycle} == {sigma[u], 3})
               or (kind(u) == (1, 1) and sigma[u] == 2)}

    eta = [0] * g.n
    for u in range(g.n):
        if u in on_cycle:
            eta[u] = tau[u]
        elif u in flipped:
            eta[u] = 3 - sigma[u]
        elif u in clash:
            eta[u] = 3
        elif adj[u] & flipped:
            eta[u] = 3
        else:
            eta[u] = sigma[u]

    if not is_proper_coloring(g, eta):
        bad = [(u, v) for u, v in g.edges() if eta[u] == eta[v]]
        raise InvariantViolation(f"constructed coloring is improper on edges {bad}")
    if any(eta[v] != tau[v] for v in cycle):
        raise InvariantViolation("constructed coloring does not extend the cycle pattern")
    return _witness(eta, cycle, pair)


def ladder_witness(pair=(1, 2)) -> tuple[Graph, DisconnectionWitness]:
    """The explicit pair of colorings on the circular ladder with six rungs.

    Rim vertex v_i (index i-1) gets i mod 3 and w_i (index 5+i) gets
    (i+1) mod 3, with residues written as 1..3.
    """
    g = circular_ladder_graph(6)
    eta = [0] * 12
    for i in range(1, 7):
        eta[i - 1] = (i - 1) % 3 + 1
        eta[5 + i] = i % 3 + 1
    if not is_proper_coloring(g, eta):
        raise InvariantViolation("ladder coloring is improper")
    return g, _witness(eta, list(range(6)), pair)


def witness_separates(g: Graph, w: DisconnectionWitness) -> bool:
    """Oracle check: the two colorings lie in different components of Hom(g, K_3)."""
    comps = hom_components(g, complete_graph(3))
    to_map = lambda col: tuple(c - 1 for c in col)
    return not comps.same_component(to_map(w.eta), to_map(w.eta_swapped))


def cycle_coloring_components(n: int):
    """Components of Hom(C_n, C_3) together with each map's return number."""
    comps = hom_components(cycle_graph(n), complete_graph(3))
    returns = [return_number(CycleHom.of([a + 1 for a in f])) for f in comps.maps]
    return comps, returns
