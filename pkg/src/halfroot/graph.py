"""Graphs, bipartite graphs and the basic half-square constructions.

Vertices are dense integer ids ``0..n-1``. Display names live in an optional
``labels`` tuple and never take part in equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import kernels


def _freeze(n: int, edges: Iterable[tuple[int, int]]) -> tuple[frozenset[int], ...]:
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return tuple(frozenset(s) for s in nbrs)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on ``0..n-1``."""

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise ValueError(f"self-loop at {v}")
            for u in nb:
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        return cls(n, _freeze(n, edges), None if labels is None else tuple(labels))

    @classmethod
    def from_adjacency(cls, matrix) -> "Graph":
        a = np.asarray(matrix, dtype=bool)
        n = a.shape[0]
        iu, ju = np.nonzero(np.triu(a, 1))
        return cls.from_edges(n, zip(iu.tolist(), ju.tolist()))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def closed(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, lexicographic."""
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in nb) for nb in self.adj)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def closed_neighborhood_matrix(self) -> np.ndarray:
        return self.adjacency_matrix() | np.eye(self.n, dtype=np.uint8)

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(b in self.adj[a] for a, b in combinations(vs, 2))

    def is_stable(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return not any(b in self.adj[a] for a, b in combinations(vs, 2))

    def induced(self, vs: Sequence[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in the order given."""
        index = {v: i for i, v in enumerate(vs)}
        edges = [(index[u], index[w]) for u in vs for w in self.adj[u] if w in index and index[u] < index[w]]
        labels = None if self.labels is None else [self.labels[v] for v in vs]
        return Graph.from_edges(len(vs), edges, labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def without(self, vs: Iterable[int]) -> "Graph":
        drop = set(vs)
        return self.induced([v for v in range(self.n) if v not in drop])

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with sides ``X = 0..nx-1`` and ``Y = 0..ny-1``.

    ``biadj[x]`` holds the Y-neighbours of ``x``.
    """

    nx: int
    ny: int
    biadj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.biadj) != self.nx:
            raise ValueError("biadjacency length does not match nx")
        for x, nb in enumerate(self.biadj):
            for y in nb:
                if not 0 <= y < self.ny:
                    raise ValueError(f"edge ({x}, {y}) leaves Y range")

    @classmethod
    def from_edges(cls, nx: int, ny: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        nbrs: list[set[int]] = [set() for _ in range(nx)]
        for x, y in edges:
            x, y = int(x), int(y)
            if not (0 <= x < nx and 0 <= y < ny):
                raise ValueError(f"edge ({x}, {y}) out of range for ({nx}, {ny})")
            nbrs[x].add(y)
        return cls(nx, ny, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_y_neighborhoods(cls, nx: int, hoods: Sequence[Iterable[int]]) -> "BipartiteGraph":
        return cls.from_edges(nx, len(hoods), ((x, y) for y, h in enumerate(hoods) for x in h))

    @classmethod
    def from_matrix(cls, matrix) -> "BipartiteGraph":
        a = np.asarray(matrix, dtype=bool)
        xs, ys = np.nonzero(a)
        return cls.from_edges(a.shape[0], a.shape[1], zip(xs.tolist(), ys.tolist()))

    @cached_property
    def yadj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.ny)]
        for x, nb in enumerate(self.biadj):
            for y in nb:
                nbrs[y].add(x)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((x, y) for x in range(self.nx) for y in sorted(self.biadj[x]))

    def side(self, side: str) -> tuple[frozenset[int], ...]:
        """Neighbourhoods of the vertices on ``side`` ('x' or 'y')."""
        return self.biadj if _side(side) == "x" else self.yadj

    def size(self, side: str) -> int:
        return self.nx if _side(side) == "x" else self.ny

    def matrix(self) -> np.ndarray:
        a = np.zeros((self.nx, self.ny), dtype=np.uint8)
        for x, y in self.edges:
            a[x, y] = 1
        return a

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(self.ny, self.nx, self.yadj)

    def delete_y(self, ys: Iterable[int]) -> "BipartiteGraph":
        drop = set(ys)
        keep = [y for y in range(self.ny) if y not in drop]
        index = {y: i for i, y in enumerate(keep)}
        return BipartiteGraph(self.nx, len(keep), tuple(frozenset(index[y] for y in nb if y in index) for nb in self.biadj))

    def as_graph(self) -> Graph:
        """Plain graph with X first, then Y shifted by ``nx``."""
        return Graph.from_edges(self.nx + self.ny, ((x, self.nx + y) for x, y in self.edges))


def _side(side: str) -> str:
    s = side.lower()
    if s not in ("x", "y", "v"):
        raise ValueError(f"side must be 'x' or 'y', got {side!r}")
    return "x" if s == "v" else s


@dataclass(frozen=True)
class CliqueSet:
    cliques: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def __getitem__(self, i):
        return self.cliques[i]


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[tuple[int, ...], ...]

    def representative_map(self, n: int) -> list[int]:
        """For each vertex, the smallest member of its class."""
        rep = [0] * n
        for cls in self.classes:
            for v in cls:
                rep[v] = cls[0]
        return rep


def half_square(b: BipartiteGraph, side: str = "x") -> Graph:
    """Half-square of ``b`` on ``side``: two vertices adjacent iff they share a neighbour."""
    if _side(side) == "x":
        m = b.matrix()
    else:
        m = b.matrix().T.copy()
    a = kernels.half_square_adjacency(m)
    return Graph.from_adjacency(a)


def half_square_sets(b: BipartiteGraph, side: str = "x") -> Graph:
    """Set-based half-square; same result as :func:`half_square`, no matrices."""
    own, other = (b.biadj, b.yadj) if _side(side) == "x" else (b.yadj, b.biadj)
    edges = set()
    for hood in other:
        for u, v in combinations(sorted(hood), 2):
            edges.add((u, v))
    return Graph.from_edges(len(own), edges)


def subdivision(g: Graph) -> BipartiteGraph:
    """X = V, Y = E (in sorted edge order), x ~ e iff x is an endpoint of e."""
    return BipartiteGraph.from_y_neighborhoods(g.n, g.edges)


def _bk_pivot(adj: tuple[frozenset[int], ...], r: list[int], p: set[int], x: set[int], out: list):
    if not p and not x:
        out.append(tuple(sorted(r)))
        return
    pivot = max(p | x, key=lambda u: (len(p & adj[u]), -u))
    for v in sorted(p - adj[pivot]):
        _bk_pivot(adj, r + [v], p & adj[v], x & adj[v], out)
        p.discard(v)
        x.add(v)


def maximal_cliques(g: Graph, peo: Sequence[int] | None = None) -> CliqueSet:
    """All inclusion-maximal cliques, each sorted, listed in sorted order.

    With a perfect elimination ordering ``peo`` (chordal input) the cliques are
    read off as ``{v} | later neighbours``; otherwise Bron-Kerbosch with
    pivoting is used.
    """
    if g.n == 0:
        return CliqueSet(())
    if peo is not None:
        cliques = _cliques_from_peo(g, peo)
    else:
        out: list[tuple[int, ...]] = []
        _bk_pivot(g.adj, [], set(range(g.n)), set(), out)
        cliques = out
    return CliqueSet(tuple(sorted(cliques)))


def _cliques_from_peo(g: Graph, peo: Sequence[int]) -> list[tuple[int, ...]]:
    pos = {v: i for i, v in enumerate(peo)}
    cands = []
    for v in peo:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        cands.append(frozenset(later) | {v})
    # a candidate is maximal unless a strictly larger candidate contains it
    cands.sort(key=len, reverse=True)
    kept: list[frozenset[int]] = []
    for c in cands:
        if not any(c <= k for k in kept):
            kept.append(c)
    return [tuple(sorted(c)) for c in kept]


def vertex_clique_incidence(g: Graph, cliques: CliqueSet | None = None) -> BipartiteGraph:
    """X = V, Y = maximal cliques; v ~ Q iff v in Q."""
    if cliques is None:
        cliques = maximal_cliques(g)
    b = BipartiteGraph.from_y_neighborhoods(g.n, list(cliques))
    if half_square_sets(b, "x") != g:
        raise AssertionError("vertex-clique incidence graph does not reproduce the input")
    return b


def true_twin_classes(g: Graph) -> TwinPartition:
    """Classes of the relation N[u] = N[v], each sorted, ordered by smallest member."""
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.closed(v), []).append(v)
    return TwinPartition(tuple(sorted(tuple(c) for c in groups.values())))


def twin_quotient(g: Graph) -> tuple[Graph, list[int]]:
    """Graph induced by one representative (the smallest) per true-twin class.

    Returns the quotient and the representatives in quotient order.
    """
    reps = [c[0] for c in true_twin_classes(g).classes]
    return g.induced(reps), reps


def substitute(g: Graph, sizes: Sequence[int]) -> tuple[Graph, list[list[int]]]:
    """Replace each vertex ``v`` by a clique of ``sizes[v]`` vertices.

    Returns the new graph and, per original vertex, the ids of its clique.
    """
    if len(sizes) != g.n:
        raise ValueError("need one size per vertex")
    if any(s < 1 for s in sizes):
        raise ValueError("substitution sizes must be positive")
    blocks: list[list[int]] = []
    nxt = 0
    for s in sizes:
        blocks.append(list(range(nxt, nxt + s)))
        nxt += s
    edges = []
    for blk in blocks:
        edges.extend(combinations(blk, 2))
    for u, v in g.edges:
        edges.extend((a, b) for a in blocks[u] for b in blocks[v])
    return Graph.from_edges(nxt, edges), blocks


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        out.append(sorted(comp))
    return out


def big_components(g: Graph) -> list[list[int]]:
    return [c for c in components(g) if len(c) >= 2]


def universal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if len(g.adj[v]) == g.n - 1]


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def shortest_path(g: Graph, s: int, t: int, allowed: set[int] | None = None) -> list[int] | None:
    """BFS path from s to t using only ``allowed`` interior vertices."""
    prev = {s: s}
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for u in sorted(g.adj[v]):
                if u in prev or (allowed is not None and u != t and u not in allowed):
                    continue
                prev[u] = v
                if u == t:
                    path = [t]
                    while path[-1] != s:
                        path.append(prev[path[-1]])
                    return path[::-1]
                nxt.append(u)
        frontier = nxt
    return None
