"""Mod-2 homology of hom-complexes via the order complex of the face poset.

Cells of a hom-complex are products of simplices, so the order complex
(chains of cells under containment) is a triangulation of the same space.
Ranks of its boundary matrices over GF(2) give reduced Betti numbers.

Connectivity here is homological: vanishing reduced mod-2 homology. It is
implied by topological connectivity but does not certify it.
"""
from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence, Union

from .graph import Graph, complete_graph, degeneracy
from .hom import (DEFAULT_BUDGET, BudgetExceeded, HomComplex, PreconditionError, enumerate_cells,
                  hom_components)

DEFAULT_SIMPLEX_BUDGET = 5 * 10**6

EMPTY = "empty"


def gf2_rank(columns: Iterable[Iterable[int]]) -> int:
    """Rank over GF(2) of a sparse matrix given as columns of row indices.

    Column reduction keyed on the largest row index of each column.
    """
    pivots: dict[int, set] = {}
    rank = 0
    for col in columns:
        cur = set(col)
        while cur:
            low = max(cur)
            p = pivots.get(low)
            if p is None:
                pivots[low] = cur
                rank += 1
                break
            cur ^= p
    return rank


class SimplicialComplex:
    """Simplices as increasing vertex tuples, grouped by dimension.

    ``known_through`` is the largest dimension whose simplices are all listed;
    it is ``None`` when the whole complex is present.
    """

    def __init__(self, simplices_by_dim: list[list[tuple[int, ...]]], known_through: Optional[int] = None):
        self._simplices = [list(s) for s in simplices_by_dim]
        self._index: list[Optional[dict]] = [None] * len(self._simplices)
        self.known_through = known_through

    @classmethod
    def from_facets(cls, facets) -> "SimplicialComplex":
        from itertools import combinations

        dims: dict[int, set] = {}
        for f in facets:
            f = tuple(sorted(f))
            for r in range(1, len(f) + 1):
                for face in combinations(f, r):
                    dims.setdefault(r - 1, set()).add(face)
        top = max(dims, default=-1)
        return cls([sorted(dims.get(q, ())) for q in range(top + 1)])

    def _available(self, q: int) -> bool:
        return self.known_through is None or q <= self.known_through

    def ensure(self, q: int) -> None:
        """Make all q-simplices available (subclasses generate lazily)."""
        if not self._available(q):
            raise PreconditionError(f"simplices of dimension {q} are not available")

    def simplices(self, q: int) -> list[tuple[int, ...]]:
        if q < 0:
            return []
        self.ensure(q)
        return self._simplices[q] if q < len(self._simplices) else []

    def count(self, q: int) -> int:
        return len(self.simplices(q))

    @property
    def vertex_count(self) -> int:
        return self.count(0)

    @property
    def dimension(self) -> int:
        if self.known_through is not None:
            raise PreconditionError("dimension unknown for a partially built complex")
        return len(self._simplices) - 1

    def index(self, q: int) -> dict:
        if self._index[q] is None:
            self._index[q] = {s: i for i, s in enumerate(self._simplices[q])}
        return self._index[q]

    def boundary_columns(self, q: int) -> list[int]:
        """Columns of the GF(2) boundary map from q- to (q-1)-simplices."""
        simplices = self.simplices(q)
        if not simplices:
            return []
        if q == 0:
            # augmentation: every vertex maps to the single (-1)-simplex
            return [(0,)] * len(simplices)
        self.simplices(q - 1)
        idx = self.index(q - 1)
        return [[idx[s[:i] + s[i + 1:]] for i in range(len(s))] for s in simplices]


class OrderComplex(SimplicialComplex):
    """Chains in the face poset of a hom-complex, generated one dimension at a time.

    Vertex ``i`` of the order complex is cell ``i`` of the hom-complex. Cells
    are sorted by dimension, so every chain is an increasing id tuple. When
    built from a d-skeleton, homology is only meaningful below dimension d.
    """

    def __init__(self, c: HomComplex, budget: int = DEFAULT_SIMPLEX_BUDGET):
        super().__init__([], known_through=-1)
        self.source = c
        self.budget = budget
        self.total = 0
        self._below = _strict_subcells(c)
        self._top = c.dimension
        self.homology_through = None if c.complete else c.max_dim - 1

    def ensure(self, q: int) -> None:
        if self.known_through is None:
            return
        while self.known_through < q and self.known_through < self._top:
            self._grow()
        if self.known_through >= self._top:
            self.known_through = None

    def _grow(self):
        q = self.known_through + 1
        if q == 0:
            new = [(i,) for i in range(len(self.source.cells))]
        else:
            new = []
            below = self._below
            for s in self._simplices[q - 1]:
                for b in below[s[0]]:
                    new.append((b,) + s)
            new.sort()
        self.total += len(new)
        if self.total > self.budget:
            raise BudgetExceeded(f"order complex through dimension {q} ({self.total} simplices)", self.budget)
        self._simplices.append(new)
        self._index.append(None)
        self.known_through = q

    @property
    def dimension(self) -> int:
        return self._top


def _strict_subcells(c: HomComplex) -> list[list[int]]:
    """All proper faces of each cell, via closure of the codimension-1 faces."""
    below: list[list[int]] = []
    for fs in c.faces:
        acc = set(fs)
        for f in fs:
            acc.update(below[f])
        below.append(sorted(acc))
    return below


def order_complex(c: HomComplex, budget: int = DEFAULT_SIMPLEX_BUDGET) -> OrderComplex:
    """Barycentric subdivision of ``c`` (or of the skeleton ``c`` holds)."""
    return OrderComplex(c, budget)


def betti_mod2(s: SimplicialComplex, max_dim: Optional[int] = None) -> list[int]:
    """Reduced Betti numbers over GF(2), in dimensions ``0..max_dim``.

    Defaults to every dimension the complex determines. The empty complex
    has reduced homology only in dimension -1 and returns ``[]``.
    """
    limit = getattr(s, "homology_through", None)
    if max_dim is None:
        if limit is not None:
            max_dim = limit
        else:
            s.ensure(10**9)
            max_dim = s.dimension
    elif limit is not None and max_dim > limit:
        raise PreconditionError(f"a {limit + 1}-skeleton determines homology only through dimension {limit}")
    if s.count(0) == 0:
        return []
    out = []
    rank_prev = gf2_rank(s.boundary_columns(0))
    for q in range(max_dim + 1):
        rank_next = gf2_rank(s.boundary_columns(q + 1))
        out.append(s.count(q) - rank_prev - rank_next)
        rank_prev = rank_next
    return out


def hom_betti(c: HomComplex, max_dim: Optional[int] = None,
              budget: int = DEFAULT_SIMPLEX_BUDGET) -> list[int]:
    """Reduced mod-2 Betti numbers of a hom-complex through ``max_dim``.

    Only the ``(max_dim + 1)``-skeleton is subdivided.
    """
    if max_dim is None:
        if not c.complete:
            max_dim = c.max_dim - 1
        else:
            max_dim = c.dimension
    return betti_mod2(order_complex(c.skeleton(max_dim + 1), budget), max_dim)


def unreduced(betti: Sequence[int]) -> list[int]:
    """Unreduced Betti numbers from reduced ones of a nonempty complex."""
    if not betti:
        return []
    return [betti[0] + 1] + list(betti[1:])


def cellular_betti_mod2(c: HomComplex) -> list[int]:
    """Reduced Betti numbers from the cellular chain complex over GF(2).

    Every cell is a product of simplices, so each codimension-1 face has
    incidence 1 mod 2. Independent of the order complex.
    """
    if not c.complete:
        raise PreconditionError("cellular homology needs an untruncated complex")
    if c.is_empty():
        return []
    by_dim: list[list[int]] = [[] for _ in range(c.dimension + 1)]
    for i, d in enumerate(c.dims):
        by_dim[d].append(i)
    pos = {}
    for cells in by_dim:
        for j, i in enumerate(cells):
            pos[i] = j
    ranks = [1]  # augmentation
    for q in range(1, c.dimension + 1):
        ranks.append(gf2_rank([pos[f] for f in c.faces[i]] for i in by_dim[q]))
    ranks.append(0)
    return [len(by_dim[q]) - ranks[q] - ranks[q + 1] for q in range(c.dimension + 1)]


def homological_connectivity(c: HomComplex, cap: Optional[int] = None,
                             budget: int = DEFAULT_SIMPLEX_BUDGET) -> Union[int, float, str]:
    """Largest k with the complex connected and reduced mod-2 homology zero through k.

    Returns ``"empty"`` for the empty complex, -1 when it is disconnected,
    and ``math.inf`` when every reduced Betti number vanishes. With ``cap``,
    computation stops once ``cap`` is reached and ``cap`` is returned.
    """
    if c.is_empty():
        return EMPTY
    top = c.dimension if c.complete else c.max_dim - 1
    upto = top if cap is None else min(top, cap)
    betti = hom_betti(c, upto, budget)
    for q, b in enumerate(betti):
        if b:
            return q - 1
    if cap is not None and cap <= top:
        return cap
    if not c.complete:
        raise PreconditionError("connectivity beyond the enumerated skeleton is undetermined")
    return math.inf


def verify_degeneracy_bound(g: Graph, m: int, budget: int = DEFAULT_BUDGET,
                       simplex_budget: int = DEFAULT_SIMPLEX_BUDGET) -> bool:
    """Check that Hom(g, K_m) is homologically at least (m - D(g) - 2)-connected."""
    d, _ = degeneracy(g)
    bound = m - d - 2
    if bound < -1:
        return True
    km = complete_graph(m)
    if bound == -1:
        return bool(hom_components(g, km, budget).maps)
    if hom_components(g, km, budget).count != 1:
        return False
    if bound == 0:
        return True
    c = enumerate_cells(g, km, max_dim=bound + 1, budget=budget)
    conn = homological_connectivity(c, cap=bound, budget=simplex_budget)
    return conn != EMPTY and conn >= bound
