"""Undirected simple graphs and the graph-theoretic procedures used on them.

Vertices are always dense 0-based integers. Subgraph constructors keep a
``labels`` tuple mapping each new vertex back to its id in the parent graph,
so results of peeling/folding can be reported in original coordinates.
"""
from __future__ import annotations

import heapq
from collections import deque
from itertools import combinations
from typing import Iterable, Optional, Sequence


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


class GraphFormatError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("_adj", "labels", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(a) for a in adj)
        self._m = sum(len(a) for a in adj) // 2
        if labels is None:
            labels = tuple(range(n))
        elif len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        self.labels = tuple(labels)

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]], labels=None) -> "Graph":
        edges = [(u, v) for u, nbrs in enumerate(adjacency) for v in nbrs if u < v]
        return cls(len(adjacency), edges, labels=labels)

    @property
    def n(self) -> int:
        return len(self._adj)

    vertex_count = n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[frozenset, ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def _check_vertex(self, v):
        if not (0 <= v < self.n):
            raise IndexError(f"vertex {v} out of range for graph on {self.n} vertices")

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[w]) for u in keep for w in self._adj[u] if w in index and u < w]
        return Graph(len(keep), edges, labels=[self.labels[v] for v in keep])

    def remove_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# -- construction ------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite_graph(i: int, j: int) -> Graph:
    return Graph(i + j, [(a, i + b) for a in range(i) for b in range(j)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite_graph(1, leaves)


def cube_graph() -> Graph:
    """The 1-skeleton of the 3-cube; vertex ``x`` is the bit vector of ``x``."""
    return Graph(8, [(x, x ^ (1 << b)) for x in range(8) for b in range(3) if x < x ^ (1 << b)])


def circular_ladder_graph(r: int) -> Graph:
    """Rims ``0..r-1`` and ``r..2r-1`` with rungs ``i ~ r+i``."""
    edges = []
    for i in range(r):
        edges.append((i, (i + 1) % r))
        edges.append((r + i, r + (i + 1) % r))
        edges.append((i, r + i))
    return Graph(2 * r, edges)


def h1_graph() -> Graph:
    """Two squares sharing an edge (the 2x3 grid); 0-1 is the shared edge."""
    return Graph(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 1), (1, 3)])


def h2_graph() -> Graph:
    """K_{2,3}: vertices 1 and 2 are both adjacent to 0, 3 and 4."""
    return Graph(5, [(0, 1), (0, 2), (2, 3), (1, 3), (2, 4), (1, 4)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


_NAMED = {
    "q3": cube_graph,
    "cube": cube_graph,
    "ladder6": lambda: circular_ladder_graph(6),
    "h1": h1_graph,
    "h2": h2_graph,
}


def named_graph(keyword: str) -> Graph:
    """Build a graph from a short keyword.

    Accepted forms: ``k<n>``, ``c<n>``, ``p<n>``, ``star<n>``, ``ladder<r>``,
    ``kij:i,j``, ``q3``, ``h1``, ``h2``.
    """
    key = keyword.strip().lower()
    if key in _NAMED:
        return _NAMED[key]()
    try:
        if key.startswith("kij:"):
            i, j = (int(x) for x in key[4:].split(","))
            return complete_bipartite_graph(i, j)
        for prefix, build in (("ladder", circular_ladder_graph), ("star", star_graph),
                              ("k", complete_graph), ("c", cycle_graph), ("p", path_graph)):
            if key.startswith(prefix) and key[len(prefix):].isdigit():
                return build(int(key[len(prefix):]))
    except ValueError as exc:
        raise GraphFormatError(f"bad graph keyword {keyword!r}: {exc}") from None
    raise GraphFormatError(f"unknown graph keyword {keyword!r}")


# -- edge-list IO ------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.

    Duplicate and reversed edges are merged. Blank lines and ``#`` comments
    are ignored.
    """
    lines = [(i, ln.split("#", 1)[0].split()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, toks) for i, toks in lines if toks]
    if not lines:
        raise GraphFormatError("empty input")
    lineno, header = lines[0]
    try:
        n, m = (int(t) for t in header)
    except ValueError:
        raise GraphFormatError("header must be 'n m'", lineno) from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative count in header", lineno)
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}", lineno)
    edges = set()
    for lineno, toks in body:
        try:
            u, v = (int(t) for t in toks)
        except ValueError:
            raise GraphFormatError("edge line must be 'u v'", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError("loops are not allowed", lineno)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def load_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


# -- degrees, cores, degeneracy ---------------------------------------------

def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def min_degree(g: Graph) -> int:
    return min((len(a) for a in g.adjacency), default=0)


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def k_core_vertices(g: Graph, k: int) -> set[int]:
    """Vertex set of the k-core, by queue-driven peeling."""
    deg = [len(a) for a in g.adjacency]
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] < k)
    for v in queue:
        alive[v] = False
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] < k:
                    alive[w] = False
                    queue.append(w)
    return {v for v in range(g.n) if alive[v]}


def k_core(g: Graph, k: int) -> Graph:
    """The maximal induced subgraph of minimum degree at least ``k``."""
    return g.induced_subgraph(k_core_vertices(g, k))


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Return ``(D, ordering)`` by min-degree peeling.

    Each vertex in ``ordering`` has at most ``D`` neighbors among the vertices
    after it. Ties go to the smallest vertex, so the ordering is deterministic.
    """
    n = g.n
    if n == 0:
        return 0, []
    deg = [len(a) for a in g.adjacency]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * n
    order, best = [], 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue  # stale entry
        removed[v] = True
        order.append(v)
        best = max(best, d)
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return best, order


# -- folds -------------------------------------------------------------------

def find_fold(g: Graph) -> Optional[tuple[int, int]]:
    """First ``(v, u)``, ``v != u``, with ``N(v)`` contained in ``N(u)``."""
    adj = g.adjacency
    for v in range(g.n):
        nv = adj[v]
        if not nv:
            # an isolated vertex folds onto anything else
            if g.n > 1:
                return v, 0 if v != 0 else 1
            continue
        candidates = adj[next(iter(nv))]
        for w in nv:
            candidates = candidates & adj[w]
        for u in sorted(candidates):
            if u != v:
                return v, u
    return None


def fold_reduce(g: Graph) -> Graph:
    """Apply folds until none remain; labels refer to vertices of ``g``."""
    while True:
        fold = find_fold(g)
        if fold is None:
            return g
        g = g.remove_vertices([fold[0]])


def folds_to_edge(g: Graph) -> bool:
    if g.m == 0:
        raise PreconditionError("folds_to_edge needs a graph with at least one edge")
    if len(connected_components(g)) != 1:
        raise PreconditionError("folds_to_edge needs a connected graph")
    r = fold_reduce(g)
    return r.n == 2 and r.m == 1


# -- bipartiteness and cycles -----------------------------------------------

def _bfs_two_color(g: Graph):
    """Return (color, odd_edge): color in {1, 2} per vertex, or the first
    conflicting edge together with BFS parents."""
    color = [0] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s]:
            continue
        color[s] = 1
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adjacency[v]):
                if not color[w]:
                    color[w] = 3 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return None, (v, w), parent
    return color, None, parent


def is_bipartite(g: Graph) -> Optional[list[int]]:
    """A two-coloring with parts labelled 1 and 2, or None."""
    color, _, _ = _bfs_two_color(g)
    return color


def find_odd_cycle(g: Graph) -> Optional[list[int]]:
    color, edge, parent = _bfs_two_color(g)
    if color is not None:
        return None
    v, w = edge
    path_v, path_w = [v], [w]
    while parent[path_v[-1]] != -1:
        path_v.append(parent[path_v[-1]])
    while parent[path_w[-1]] != -1:
        path_w.append(parent[path_w[-1]])
    # trim the common tail back to the lowest common ancestor
    while len(path_v) > 1 and len(path_w) > 1 and path_v[-2] == path_w[-2]:
        path_v.pop()
        path_w.pop()
    return path_v + path_w[-2::-1]


def _cycle_of_length(g: Graph, length: int) -> Optional[list[int]]:
    adj = [sorted(a) for a in g.adjacency]
    for s in range(g.n):
        path, on_path = [s], {s}

        def extend(v):
            if len(path) == length:
                return s in g.adjacency[v] and path[1] < path[-1]
            for w in adj[v]:
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    if extend(w):
                        return True
                    path.pop()
                    on_path.discard(w)
            return False

        if extend(s):
            return list(path)
    return None


def minimal_long_even_cycle(g: Graph) -> Optional[list[int]]:
    """A shortest cycle of length at least 6 in a bipartite graph."""
    if is_bipartite(g) is None:
        raise PreconditionError("minimal_long_even_cycle needs a bipartite graph")
    core = k_core_vertices(g, 2)
    if len(core) < 6:
        return None
    h = g.induced_subgraph(core)
    for length in range(6, h.n + 1, 2):
        cyc = _cycle_of_length(h, length)
        if cyc is not None:
            return [h.labels[v] for v in cyc]
    return None


def count_cycles(g: Graph, max_length: int) -> dict[int, int]:
    """Number of (not necessarily induced) cycles of each length 3..max_length."""
    counts = {l: 0 for l in range(3, max_length + 1)}
    core = k_core_vertices(g, 2)
    if not core:
        return counts
    h = g.induced_subgraph(core)
    adj = [sorted(a) for a in h.adjacency]
    for s in range(h.n):
        stack = [(s, [s])]
        while stack:
            v, path = stack.pop()
            for w in adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    counts[len(path)] += 1
                elif w > s and w not in path and len(path) < max_length:
                    stack.append((w, path + [w]))
    return counts


def distances_from(g: Graph, sources: Iterable[int]) -> list[Optional[int]]:
    """Multi-source BFS distance; None for unreachable vertices."""
    dist: list[Optional[int]] = [None] * g.n
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def connected_components(g: Graph) -> list[set[int]]:
    """Vertex sets of components, largest first (ties by smallest vertex)."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = {s}, [s]
        while queue:
            v = queue.pop()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps


# -- subgraph search and colouring ------------------------------------------

def find_subgraph(g: Graph, pattern: Graph) -> Optional[dict[int, int]]:
    """An injective map pattern -> g preserving edges, or None."""
    if pattern.n > g.n or pattern.m > g.m:
        return None
    # place high-degree pattern vertices first, then keep the order connected
    order = []
    remaining = set(range(pattern.n))
    while remaining:
        frontier = [v for v in remaining if any(w in order for w in pattern.adjacency[v])]
        pool = frontier or list(remaining)
        nxt = max(pool, key=lambda v: (len(pattern.adjacency[v]), -v))
        order.append(nxt)
        remaining.discard(nxt)
    pdeg = [len(a) for a in pattern.adjacency]
    gdeg = [len(a) for a in g.adjacency]
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def place(i):
        if i == len(order):
            return True
        p = order[i]
        placed_nbrs = [mapping[q] for q in pattern.adjacency[p] if q in mapping]
        if placed_nbrs:
            cands = set(g.adjacency[placed_nbrs[0]])
            for x in placed_nbrs[1:]:
                cands &= g.adjacency[x]
        else:
            cands = range(g.n)
        for x in sorted(cands):
            if x in used or gdeg[x] < pdeg[p]:
                continue
            mapping[p] = x
            used.add(x)
            if place(i + 1):
                return True
            del mapping[p]
            used.discard(x)
        return False

    return dict(mapping) if place(0) else None


def contains_subgraph(g: Graph, pattern: Graph) -> bool:
    return find_subgraph(g, pattern) is not None


def is_colorable(g: Graph, k: int) -> bool:
    return find_coloring(g, k) is not None


def find_coloring(g: Graph, k: int) -> Optional[list[int]]:
    """A proper coloring with colors ``0..k-1`` by DSATUR-ordered backtracking."""
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    color = [-1] * n
    adj = g.adjacency

    def pick():
        best, key = -1, None
        for v in range(n):
            if color[v] < 0:
                sat = len({color[w] for w in adj[v] if color[w] >= 0})
                cand = (sat, len(adj[v]), -v)
                if key is None or cand > key:
                    best, key = v, cand
        return best

    def solve(done, used):
        if done == n:
            return True
        v = pick()
        forbidden = {color[w] for w in adj[v]}
        # symmetry break: at most one fresh color per step
        for c in range(min(k, used + 1)):
            if c not in forbidden:
                color[v] = c
                if solve(done + 1, max(used, c + 1)):
                    return True
        color[v] = -1
        return False

    return color if solve(0, 0) else None


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    if is_bipartite(g) is not None:
        return 2
    k = 3
    while not is_colorable(g, k):
        k += 1
    return k
