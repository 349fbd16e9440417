"""Brute-force ground truth for tests and acceptance runs.

Everything here works from definitions by exhaustive enumeration. Nothing
imports the polynomial recognizers or the half-square constructions, so the
answers are independent of them. Searches that would blow past their budget
raise :class:`OracleRefusal` instead of guessing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterator, Sequence

import numpy as np

from . import kernels
from .graph import BipartiteGraph, Graph, half_square

DEFAULT_CAP = 7
MAX_PERM_COLS = 9
ROOT_BUDGET = 2_000_000


class OracleRefusal(RuntimeError):
    """Instance too large for exhaustive search; never a 'no'."""


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    mode: str = "all"  # "all" | "connected"
    filters: tuple[Callable[[Graph], bool], ...] = field(default=())
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.mode not in ("all", "connected"):
            raise ValueError(f"unknown enumeration mode {self.mode!r}")
        if not 0 <= self.n <= self.cap:
            raise ValueError(f"n={self.n} outside 0..{self.cap}")


def enumerate_graphs(spec: EnumerationSpec | int, connected_only: bool = False, cap: int = DEFAULT_CAP) -> Iterator[Graph]:
    """All labeled graphs on ``n`` vertices, by edge bitmask over sorted pairs."""
    if isinstance(spec, int):
        spec = EnumerationSpec(spec, "connected" if connected_only else "all", cap=cap)
    n = spec.n
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if spec.mode == "connected" and not _connected(g):
            continue
        if all(f(g) for f in spec.filters):
            yield g


# -- small helpers (kept local on purpose) ----------------------------------------


def _connected(g: Graph, within: Sequence[int] | None = None) -> bool:
    vs = set(range(g.n)) if within is None else set(within)
    if not vs:
        return True
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.adj[v] & vs:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == vs


def _components(g: Graph) -> list[list[int]]:
    left = set(range(g.n))
    out = []
    while left:
        s = min(left)
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        left -= comp
        out.append(sorted(comp))
    return out


def all_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Every clique (including the empty one), by subset enumeration."""
    out = [()]
    for r in range(1, g.n + 1):
        out.extend(c for c in combinations(range(g.n), r) if g.is_clique(c))
    return out


def brute_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    cl = [frozenset(c) for c in all_cliques(g) if c]
    return sorted(tuple(sorted(c)) for c in cl if not any(c < d for d in cl))


def _induced_cycle_subsets(g: Graph, min_len: int, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    top = g.n if max_len is None else min(max_len, g.n)
    for r in range(min_len, top + 1):
        for s in combinations(range(g.n), r):
            ss = set(s)
            if all(len(g.adj[v] & ss) == 2 for v in s) and _connected(g, s):
                yield s


def has_hole(g: Graph) -> bool:
    return next(_induced_cycle_subsets(g, 4), None) is not None


def is_sun(g: Graph, verts: Sequence[int]) -> bool:
    """Does ``verts`` induce a k-sun (k = len/2 >= 3)?"""
    vs = set(verts)
    k, odd = divmod(len(vs), 2)
    if odd or k < 3:
        return False
    deg = {v: len(g.adj[v] & vs) for v in vs}
    s = [v for v in vs if deg[v] == 2]
    t = [v for v in vs if deg[v] != 2]
    if len(s) != k or len(t) != k or not g.is_clique(t) or not g.is_stable(s):
        return False
    # the pairs {t_i, t_(i+1)} seen by the s-vertices must form one k-cycle on T
    links: dict[int, list[int]] = {v: [] for v in t}
    for v in s:
        a, b = sorted(g.adj[v] & vs)
        links[a].append(b)
        links[b].append(a)
    if any(len(x) != 2 for x in links.values()):
        return False
    prev, cur, steps = None, t[0], 0
    while True:
        nxt = links[cur][0] if links[cur][0] != prev else links[cur][1]
        prev, cur, steps = cur, nxt, steps + 1
        if cur == t[0]:
            return steps == k
        if steps > k:
            return False


def has_claw(g: Graph) -> bool:
    for c in range(g.n):
        for a, b, d in combinations(sorted(g.adj[c]), 3):
            if g.is_stable((a, b, d)):
                return True
    return False


# -- class oracles --------------------------------------------------------------


def brute_cop(rows: Sequence[Sequence[int]], ncols: int) -> bool:
    """Some column order makes every row contiguous (all permutations tried)."""
    if ncols > MAX_PERM_COLS:
        raise OracleRefusal(f"{ncols} columns exceed the permutation budget")
    a = np.zeros((len(rows), ncols), dtype=np.uint8)
    for i, r in enumerate(rows):
        a[i, list(r)] = 1
    return kernels.cop_exists(a) >= 0


def brute_gamma_free(matrix) -> bool:
    """Some row and column ordering of ``matrix`` contains no Gamma.

    Every column order is tried. For a fixed column order each Gamma between
    two rows is decided by which row comes first, so a good row order exists
    iff those forced precedences are acyclic. Gamma is symmetric under
    transposition, so the smaller side is the one permuted.
    """
    a = np.asarray(matrix, dtype=np.uint8)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if a.shape[1] > a.shape[0]:
        a = a.T
    if a.shape[1] > MAX_PERM_COLS:
        raise OracleRefusal(f"{a.shape} matrix exceeds the permutation budget")
    if a.size == 0:
        return True
    return kernels.gamma_free_exists(np.ascontiguousarray(a)) >= 0


def brute_interval(g: Graph) -> bool:
    """Maximal cliques admit an order in which each vertex's cliques are consecutive."""
    cl = brute_maximal_cliques(g)
    rows = [[i for i, q in enumerate(cl) if v in q] for v in range(g.n)]
    return brute_cop(rows, len(cl))


def brute_unit_interval(g: Graph) -> bool:
    return not has_claw(g) and brute_interval(g)


def brute_chordal(g: Graph) -> bool:
    return not has_hole(g)


def brute_strongly_chordal(g: Graph) -> bool:
    """Chordal and no induced k-sun for any 3 <= k <= n/2."""
    if has_hole(g):
        return False
    for k in range(3, g.n // 2 + 1):
        for s in combinations(range(g.n), 2 * k):
            if is_sun(g, s):
                return False
    return True


def _separated(g: Graph, u: int, v: int, cut: int) -> bool:
    seen = {u, cut}
    stack = [u]
    while stack:
        a = stack.pop()
        for b in g.adj[a]:
            if b == v:
                return False
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return True


def brute_block(g: Graph) -> bool:
    """Every block is a clique, per component.

    Two nonadjacent vertices of one component lie in a common block iff no
    single vertex separates them.
    """
    for comp in _components(g):
        for u, v in combinations(comp, 2):
            if v in g.adj[u]:
                continue
            if not any(_separated(g, u, v, w) for w in comp if w not in (u, v)):
                return False
    return True


def brute_connected_block(g: Graph) -> bool:
    # the empty graph counts as connected, matching its empty tree root
    return _connected(g) and brute_block(g)


def _twin_reps(g: Graph, vs: Sequence[int] | None = None) -> list[int]:
    vs = range(g.n) if vs is None else vs
    seen: dict[frozenset[int], int] = {}
    for v in vs:
        seen.setdefault(g.closed(v), v)
    return sorted(seen.values())


def split_partitions(g: Graph, vs: Sequence[int]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (clique, stable) 2-partitions of ``vs``, by exhaustive subset search."""
    vs = list(vs)
    for r in range(len(vs) + 1):
        for q in combinations(vs, r):
            s = tuple(v for v in vs if v not in q)
            if g.is_clique(q) and g.is_stable(s):
                yield q, s


def star_convex_condition(g: Graph) -> bool:
    """At most one big component and it has a universal vertex, or the
    true-twin quotient splits into a clique and a stable set."""
    big = [c for c in _components(g) if len(c) >= 2]
    if len(big) <= 1:
        if not big:
            return True
        c = big[0]
        if any(len(g.adj[v]) == len(c) - 1 for v in c):
            return True
    reps = _twin_reps(g)
    return next(split_partitions(g, reps), None) is not None


def star_biconvex_condition(g: Graph) -> bool:
    """At most one big component, whose twin quotient is split with a universal vertex."""
    big = [c for c in _components(g) if len(c) >= 2]
    if len(big) > 1:
        return False
    if not big:
        return True
    reps = _twin_reps(g, big[0])
    if not any(len(g.adj[r] & set(reps)) == len(reps) - 1 for r in reps):
        return False
    return next(split_partitions(g, reps), None) is not None


# -- root class definitions -------------------------------------------------------


def _star_center_exists(b: BipartiteGraph, side: str) -> bool:
    own = b.nx if side == "x" else b.ny
    other = b.yadj if side == "x" else b.biadj
    if own == 0:
        return True
    return any(all(len(h) < 2 or c in h for h in other) for c in range(own))


def _convex_side(b: BipartiteGraph, side: str) -> bool:
    own = b.nx if side == "x" else b.ny
    other = b.yadj if side == "x" else b.biadj
    return brute_cop([sorted(h) for h in other], own)


def _is_tree(b: BipartiteGraph) -> bool:
    g = b.as_graph()
    return g.n == 0 or (g.m == g.n - 1 and _connected(g))


def _is_chordal_bipartite(b: BipartiteGraph) -> bool:
    return next(_induced_cycle_subsets(b.as_graph(), 6), None) is None


def bisplit_by_definition(b: BipartiteGraph) -> bool:
    """|X| = |Y|, some X1 complete to Y, and B[X2, Y2] exactly a perfect matching.

    X1 is tried over all subsets of the full X-vertices, Y2 over all subsets
    of Y of the right size.
    """
    if b.nx != b.ny:
        return False
    full = [x for x in range(b.nx) if len(b.biadj[x]) == b.ny]
    for r in range(len(full) + 1):
        for x1 in combinations(full, r):
            x2 = [x for x in range(b.nx) if x not in x1]
            for y2 in combinations(range(b.ny), len(x2)):
                ys = set(y2)
                if all(len(b.biadj[x] & ys) == 1 for x in x2) and all(
                    sum(1 for x in x2 if y in b.biadj[x]) == 1 for y in y2
                ):
                    return True
    return False


def in_class(b: BipartiteGraph, class_tag: str) -> bool:
    """Class membership straight from the definitions."""
    if class_tag == "star_convex":
        return _star_center_exists(b, "x") or _star_center_exists(b, "y")
    if class_tag == "star_biconvex":
        return _star_center_exists(b, "x") and _star_center_exists(b, "y")
    if class_tag == "convex":
        return _convex_side(b, "x") or _convex_side(b, "y")
    if class_tag == "biconvex":
        return _convex_side(b, "x") and _convex_side(b, "y")
    if class_tag == "chordal_bipartite":
        return _is_chordal_bipartite(b)
    if class_tag == "tree":
        return _is_tree(b)
    if class_tag == "balanced_bisplit":
        return bisplit_by_definition(b)
    raise ValueError(f"unknown class {class_tag!r}")


# -- half-root search ---------------------------------------------------------------


def _covers(g: Graph, hoods: Sequence[frozenset[int]]) -> bool:
    return all(any(u in h and v in h for h in hoods) for u, v in g.edges)


def _bisplit_search(g: Graph, prune: bool, budget: int) -> BipartiteGraph | None:
    n = g.n
    universal = [v for v in range(n) if len(g.adj[v]) == n - 1]
    tried = 0
    # X1 is complete to Y, so X1 vertices are universal in the half-square
    for r in range(len(universal) + 1):
        for x1 in combinations(universal, r):
            x2 = [v for v in range(n) if v not in x1]
            sub = g.induced(x2)
            if prune:
                cands = brute_maximal_cliques(sub) or [()]
            else:
                cands = all_cliques(sub)
            for pick in combinations_with_replacement(range(len(cands)), len(x1)):
                tried += 1
                if tried > budget:
                    raise OracleRefusal("balanced bisplit search budget exceeded")
                hoods = [frozenset(x2[i] for i in cands[j]) for j in pick]
                if not _covers(sub, [frozenset(cands[j]) for j in pick]):
                    continue
                ny = n
                edges = [(x, y) for x in x1 for y in range(ny)]
                edges += [(x, i) for i, h in enumerate(hoods) for x in h]
                edges += [(x, len(x1) + i) for i, x in enumerate(x2)]
                b = BipartiteGraph.from_edges(n, ny, edges)
                if half_square(b, "x") == g and bisplit_by_definition(b):
                    return b
    return None


def brute_root_search(
    g: Graph,
    class_tag: str,
    w_max: int | None = None,
    prune: bool = True,
    budget: int = ROOT_BUDGET,
) -> BipartiteGraph | None:
    """First half-root of ``g`` in ``class_tag`` with at most ``w_max`` Y-vertices.

    Every Y-neighbourhood of a half-root is a clique of ``g``, so candidate
    roots are multisets of cliques, tried by increasing size. With ``prune``
    only antichains of nonempty cliques are used: dropping a Y-vertex whose
    neighbourhood sits inside another's keeps both the half-square and class
    membership, so no "yes" is lost. For balanced bisplit the Y side has
    exactly ``|V|`` vertices and ``w_max`` is ignored.
    """
    if class_tag == "balanced_bisplit":
        return _bisplit_search(g, prune, budget)
    w_max = 6 if w_max is None else w_max
    cl = all_cliques(g)
    if prune:
        cl = [c for c in cl if c]
    sets = [frozenset(c) for c in cl]
    tried = 0
    for w in range(w_max + 1):
        for pick in combinations_with_replacement(range(len(cl)), w):
            hoods = [sets[i] for i in pick]
            if prune and (len(set(pick)) < w or any(a < b for a in hoods for b in hoods)):
                continue
            tried += 1
            if tried > budget:
                raise OracleRefusal(f"root search budget exceeded at |W|={w}")
            if not _covers(g, hoods):
                continue
            b = BipartiteGraph.from_y_neighborhoods(g.n, [sorted(h) for h in hoods])
            if half_square(b, "x") == g and in_class(b, class_tag):
                return b
    return None
