"""Cells of Hom(G, H): multihomomorphisms encoded as tuples of bitmasks.

A cell assigns each vertex of G a nonempty subset of V(H) (bit ``a`` set means
target vertex ``a`` is in the set) such that every pair across an edge of G is
an edge of H. Maps (0-cells) are plain tuples of target vertices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .graph import Graph, PreconditionError, complete_graph

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """Enumeration would exceed the configured work bound."""

    def __init__(self, what: str, budget: int):
        self.budget = budget
        super().__init__(f"{what} exceeded budget of {budget}")


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_elements(mask: int) -> list[int]:
    return [a for a in range(mask.bit_length()) if mask >> a & 1]


def cell_dimension(cell: Sequence[int]) -> int:
    return sum(popcount(s) - 1 for s in cell)


def _neighbor_masks(h: Graph) -> list[int]:
    return [sum(1 << b for b in h.adjacency[a]) for a in range(h.n)]


def _common_neighbors(nbr_mask: list[int], full: int, mask: int) -> int:
    out = full
    for a in mask_elements(mask):
        out &= nbr_mask[a]
    return out


def is_multihomomorphism(g: Graph, h: Graph, cell: Sequence[int]) -> bool:
    if len(cell) != g.n or any(s <= 0 or s >> h.n for s in cell):
        return False
    nbr = _neighbor_masks(h)
    full = (1 << h.n) - 1
    return all(cell[y] & ~_common_neighbors(nbr, full, cell[x]) == 0 for x, y in g.edges())


def is_homomorphism(g: Graph, h: Graph, f: Sequence[int]) -> bool:
    if len(f) != g.n:
        raise ValueError(f"map has {len(f)} entries, graph has {g.n} vertices")
    for a in f:
        if not (0 <= a < h.n):
            raise ValueError(f"value {a} is not a vertex of the target")
    return all(h.has_edge(f[u], f[v]) for u, v in g.edges())


# -- enumeration -------------------------------------------------------------

def _submasks_ascending(mask: int) -> list[int]:
    subs = []
    s = mask
    while s:
        subs.append(s)
        s = (s - 1) & mask
    subs.reverse()
    return subs


def iter_cells(g: Graph, h: Graph, max_dim: Optional[int] = None, budget: int = DEFAULT_BUDGET,
               singletons: bool = False):
    """Yield all cells in vertex-major, subset-value-minor order.

    ``budget`` caps the number of candidate partial assignments tried.
    With ``singletons`` only 0-cells are produced.
    """
    n = g.n
    full = (1 << h.n) - 1
    nbr = _neighbor_masks(h)
    earlier = [[w for w in g.adjacency[v] if w < v] for v in range(n)]
    cell = [0] * n
    work = 0
    if max_dim is not None and max_dim < 0:
        return
    if singletons:
        max_dim = 0

    def rec(v, dim):
        nonlocal work
        if v == n:
            yield tuple(cell)
            return
        allowed = full
        for w in earlier[v]:
            allowed &= _common_neighbors(nbr, full, cell[w])
        if not allowed:
            return
        if max_dim == 0:
            choices = [1 << a for a in mask_elements(allowed)]
        else:
            choices = _submasks_ascending(allowed)
        for s in choices:
            d = dim + popcount(s) - 1
            if max_dim is not None and d > max_dim:
                continue
            work += 1
            if work > budget:
                raise BudgetExceeded("cell enumeration", budget)
            cell[v] = s
            yield from rec(v + 1, d)
        cell[v] = 0

    yield from rec(0, 0)


def enumerate_0cells(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All homomorphisms g -> h, lexicographically ordered."""
    return [tuple(s.bit_length() - 1 for s in c) for c in iter_cells(g, h, budget=budget, singletons=True)]


@dataclass
class HomComplex:
    """Cells of a hom-complex grouped by dimension, with codimension-1 faces.

    ``max_dim`` is set when only a skeleton was enumerated.
    """

    source: Graph
    target: Graph
    cells: list[tuple[int, ...]]
    dims: list[int]
    faces: list[list[int]]
    max_dim: Optional[int] = None
    index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.index:
            self.index = {c: i for i, c in enumerate(self.cells)}

    @property
    def complete(self) -> bool:
        return self.max_dim is None

    def skeleton(self, d: int) -> "HomComplex":
        """Cells of dimension at most ``d`` (a prefix, since cells are sorted by dimension)."""
        if self.max_dim is not None and d >= self.max_dim:
            return self
        k = sum(1 for x in self.dims if x <= d)
        cells = self.cells[:k]
        return HomComplex(self.source, self.target, cells, self.dims[:k], self.faces[:k], max(d, -1),
                          {c: i for i, c in enumerate(cells)})

    @property
    def counts(self) -> list[int]:
        top = max(self.dims, default=-1)
        out = [0] * (top + 1)
        for d in self.dims:
            out[d] += 1
        return out

    @property
    def dimension(self) -> int:
        return max(self.dims, default=-1)

    def __len__(self):
        return len(self.cells)

    def is_empty(self) -> bool:
        return not self.cells

    def to_json(self) -> str:
        return json.dumps({"dims": self.counts, "cells": [list(c) for c in self.cells],
                           "faces": self.faces}, sort_keys=True)


def _build_complex(g: Graph, h: Graph, cells: Iterable[tuple[int, ...]], max_dim: Optional[int]) -> HomComplex:
    cells = sorted(cells, key=cell_dimension)  # stable: keeps enumeration order within a dimension
    index = {c: i for i, c in enumerate(cells)}
    faces = []
    for c in cells:
        fs = []
        for v, s in enumerate(c):
            if s & (s - 1):
                for a in mask_elements(s):
                    face = c[:v] + (s & ~(1 << a),) + c[v + 1:]
                    fs.append(index[face])
        faces.append(sorted(fs))
    return HomComplex(g, h, cells, [cell_dimension(c) for c in cells], faces, max_dim, index)


def enumerate_cells(g: Graph, h: Graph, max_dim: Optional[int] = None,
                    budget: int = DEFAULT_BUDGET) -> HomComplex:
    return _build_complex(g, h, iter_cells(g, h, max_dim, budget), max_dim)


def cell_counts(g: Graph, h: Graph, max_dim: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Number of cells per dimension, without storing the complex."""
    counts: list[int] = []
    for c in iter_cells(g, h, max_dim, budget):
        d = cell_dimension(c)
        while len(counts) <= d:
            counts.append(0)
        counts[d] += 1
    return counts


def euler_characteristic(c: HomComplex) -> int:
    if not c.complete:
        raise PreconditionError("Euler characteristic needs an untruncated complex")
    return sum(1 if d % 2 == 0 else -1 for d in c.dims)


# -- 1-skeleton connectivity -------------------------------------------------

class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.count -= 1
        return True


@dataclass
class HomComponents:
    maps: list[tuple[int, ...]]
    labels: list[int]
    count: int

    def sizes(self) -> list[int]:
        out = [0] * self.count
        for lab in self.labels:
            out[lab] += 1
        return out

    def label_of(self, f: Sequence[int]) -> int:
        return self.labels[self.maps.index(tuple(f))]

    def same_component(self, f1: Sequence[int], f2: Sequence[int]) -> bool:
        return self.label_of(f1) == self.label_of(f2)


def hom_components(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> HomComponents:
    """Connected components of Hom(g, h) computed on its 1-skeleton.

    Two maps are joined when they differ at exactly one vertex and the merged
    two-element assignment there is still a cell.
    """
    maps = enumerate_0cells(g, h, budget)
    uf = UnionFind(len(maps))
    nbr = _neighbor_masks(h)
    for v in range(g.n):
        groups: dict[tuple, int] = {}
        nv = sorted(g.adjacency[v])
        for i, f in enumerate(maps):
            key = f[:v] + f[v + 1:]
            j = groups.setdefault(key, i)
            if j != i:
                a, b = maps[j][v], f[v]
                # both values must be adjacent to every neighbour's image
                if all(nbr[f[w]] >> a & 1 and nbr[f[w]] >> b & 1 for w in nv):
                    uf.union(j, i)
    roots: dict[int, int] = {}
    labels = [roots.setdefault(uf.find(i), len(roots)) for i in range(len(maps))]
    return HomComponents(maps, labels, len(roots))


# -- Hom_I and extension of low-dimensional cells ------------------------

def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return all(not (g.adjacency[v] & vs) for v in vs)


def extends_over(g: Graph, h: Graph, independent: Sequence[int], rest: Sequence[int],
                 cell: Sequence[int]) -> bool:
    """Whether ``cell`` on ``g`` minus ``independent`` extends to all of ``g``.

    ``rest[i]`` is the g-vertex carrying ``cell[i]``.
    """
    pos = {v: i for i, v in enumerate(rest)}
    nbr = _neighbor_masks(h)
    full = (1 << h.n) - 1
    for u in independent:
        allowed = full
        for w in g.adjacency[u]:
            allowed &= _common_neighbors(nbr, full, cell[pos[w]])
        if not allowed:
            return False
    return True


def hom_I_subcomplex(g: Graph, h: Graph, independent: Iterable[int],
                     budget: int = DEFAULT_BUDGET, max_dim: Optional[int] = None) -> HomComplex:
    """Cells of Hom(g - I, h) that extend to cells of Hom(g, h)."""
    I = sorted(set(independent))
    if not is_independent(g, I):
        raise PreconditionError(f"vertex set {I} is not independent")
    sub = g.remove_vertices(I)
    rest = list(sub.labels)
    if _is_complete(h) and len(I) == 1:
        pos = {v: i for i, v in enumerate(rest)}
        nbrs = [pos[w] for w in g.adjacency[I[0]]]
        m = h.n

        def ok(cell):
            union = 0
            for i in nbrs:
                union |= cell[i]
            return popcount(union) <= m - 1
    else:
        def ok(cell):
            return extends_over(g, h, I, rest, cell)

    cells = (c for c in iter_cells(sub, h, max_dim, budget) if ok(c))
    return _build_complex(sub, h, cells, max_dim)


def _is_complete(h: Graph) -> bool:
    return h.m == h.n * (h.n - 1) // 2


def verify_skeleton_extension(g: Graph, v: int, m: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Check that the (m - deg v - 1)-skeleton of Hom(g - v, K_m) extends over v."""
    k = len(g.neighbors(v))
    top = m - k - 1
    if top < 0:
        return True
    sub = g.remove_vertices([v])
    pos = {w: i for i, w in enumerate(sub.labels)}
    nbrs = [pos[w] for w in g.adjacency[v]]
    for cell in iter_cells(sub, complete_graph(m), max_dim=top, budget=budget):
        union = 0
        for i in nbrs:
            union |= cell[i]
        if popcount(union) > m - 1:
            return False
    return True
