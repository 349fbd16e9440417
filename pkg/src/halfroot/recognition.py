"""Certifying recognition of the graph classes and bipartite root classes.

Every test returns either a positive witness or an :class:`Obstruction`;
``isinstance(result, Obstruction)`` is the failure check.
"""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .certificates import (
    BisplitPartition,
    CliqueChain,
    DoublyLexOrdering,
    Obstruction,
    SideOrdering,
    SplitPartition,
    StarWitness,
)
from .graph import BipartiteGraph, CliqueSet, Graph, components, is_connected, maximal_cliques, shortest_path
from .ordering import consecutive_ones, doubly_lexical, find_gamma

DEFAULT_WITNESS_CUTOFF = 10
SEARCH_BUDGET = 200_000


class _BudgetExceeded(Exception):
    pass


# -- chordal graphs -------------------------------------------------------------


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order; ties go to the smallest id."""
    weight = [0] * g.n
    done = [False] * g.n
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not done[u]), key=lambda u: (weight[u], -u))
        done[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not done[u]:
                weight[u] += 1
    return order


def is_induced_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i, j in combinations(range(k), 2):
        consecutive = j - i == 1 or (i == 0 and j == k - 1)
        if g.has_edge(cycle[i], cycle[j]) != consecutive:
            return False
    return True


def _hole_through(g: Graph, v: int, a: int, b: int) -> list[int] | None:
    """Hole v-a-...-b-v avoiding the rest of N[v], if one exists."""
    blocked = g.adj[v] - {a, b}
    allowed = set(range(g.n)) - blocked - {v}
    path = shortest_path(g, a, b, allowed)
    return None if path is None else [v] + path


def find_hole(g: Graph) -> list[int] | None:
    """Some induced cycle of length at least 4, or None if the graph is chordal."""
    for v in range(g.n):
        nb = sorted(g.adj[v])
        for a, b in combinations(nb, 2):
            if not g.has_edge(a, b):
                hole = _hole_through(g, v, a, b)
                if hole is not None:
                    return hole
    return None


def chordality(g: Graph) -> list[int] | Obstruction:
    """Perfect elimination ordering, or a hole.

    The ordering is the reversed maximum cardinality search order; in it every
    vertex's later neighbours form a clique.
    """
    peo = mcs_order(g)[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=pos.__getitem__)
        missing = [u for u in later if u != parent and u not in g.adj[parent]]
        if missing:
            hole = _hole_through(g, v, parent, min(missing)) or find_hole(g)
            if hole is None:
                raise AssertionError("elimination check failed but no hole found")
            return Obstruction("hole", tuple(hole))
    return peo


# -- interval and unit interval graphs -----------------------------------------


def chain_from_order(order: Sequence[Sequence[int]], n: int) -> CliqueChain:
    left = [-1] * n
    right = [-1] * n
    for i, q in enumerate(order):
        for v in q:
            if left[v] < 0:
                left[v] = i
            right[v] = i
    return CliqueChain(tuple(tuple(q) for q in order), tuple(left), tuple(right))


def check_chain(g: Graph, chain: CliqueChain) -> bool:
    """CliqueChain invariants against ``g``."""
    if sorted(chain.order) != list(maximal_cliques(g)):
        return False
    for v in range(g.n):
        idx = [i for i, q in enumerate(chain.order) if v in q]
        if not idx or idx != list(range(chain.left[v], chain.right[v] + 1)):
            return False
    return True


def interval_model(g: Graph) -> CliqueChain | Obstruction:
    """Consecutive arrangement of the maximal cliques, or an obstruction.

    Chordality first (holes are reported as such), then the cliques are read
    off the elimination ordering and arranged with the consecutive-ones test
    applied to each vertex's set of cliques.
    """
    peo = chordality(g)
    if isinstance(peo, Obstruction):
        return peo
    cliques = maximal_cliques(g, peo)
    member: list[list[int]] = [[] for _ in range(g.n)]
    for i, q in enumerate(cliques):
        for v in q:
            member[v].append(i)
    res = consecutive_ones(member, len(cliques))
    if isinstance(res, Obstruction):
        return Obstruction("not_interval", res.witness, detail="vertices whose clique sets admit no consecutive order")
    return chain_from_order([cliques[i] for i in res.perm], g.n)


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """``(center, a, b, c)`` of an induced K_{1,3}, or None."""
    for c in range(g.n):
        nb = sorted(g.adj[c])
        for i, a in enumerate(nb):
            rest = [u for u in nb[i + 1 :] if u not in g.adj[a]]
            for j, b in enumerate(rest):
                for d in rest[j + 1 :]:
                    if d not in g.adj[b]:
                        return c, a, b, d
    return None


def is_unit_interval(g: Graph) -> CliqueChain | Obstruction:
    chain = interval_model(g)
    if isinstance(chain, Obstruction):
        return chain
    claw = find_claw(g)
    if claw is not None:
        return Obstruction("claw", claw, detail="center first")
    return chain


# -- strongly chordal graphs -----------------------------------------------------


def is_induced_sun(g: Graph, clique: Sequence[int], stable: Sequence[int]) -> bool:
    """``stable[i]`` must see exactly ``clique[i]`` and ``clique[i+1]`` (cyclically)."""
    k = len(clique)
    if k < 3 or len(stable) != k or len(set(clique) | set(stable)) != 2 * k:
        return False
    if not g.is_clique(clique) or not g.is_stable(stable):
        return False
    for i, s in enumerate(stable):
        want = {clique[i], clique[(i + 1) % k]}
        if {t for t in clique if t in g.adj[s]} != want:
            return False
    return True


def find_sun(g: Graph, kmax: int, budget: int = SEARCH_BUDGET, first: Sequence[int] = ()) -> tuple | None:
    """Induced k-sun with 3 <= k <= kmax as ``(clique, stable)``.

    Raises ``_BudgetExceeded`` when the search tree exceeds ``budget`` nodes.
    ``first`` lists vertices to try as the first clique vertex before the rest.
    """
    adj = g.adj
    steps = [0]

    def tick():
        steps[0] += 1
        if steps[0] > budget:
            raise _BudgetExceeded

    def grow(ts: list[int], ss: list[int]):
        tick()
        i = len(ts)
        ti, t1 = ts[-1], ts[0]
        used = set(ts) | set(ss)
        if i >= 3:
            for s in sorted(adj[ti] & adj[t1]):
                if s in used or any(t in adj[s] for t in ts[1:-1]) or any(x in adj[s] for x in ss):
                    continue
                return list(ts), ss + [s]
        if i == kmax:
            return None
        for s in sorted(adj[ti]):
            if s in used or any(t in adj[s] for t in ts[:-1]) or any(x in adj[s] for x in ss):
                continue
            common = set(adj[s])
            for t in ts:
                common &= adj[t]
            for t in sorted(common):
                if t <= t1 or t in used or t == s or any(x in adj[t] for x in ss):
                    continue
                found = grow(ts + [t], ss + [s])
                if found:
                    return found
        return None

    order = list(dict.fromkeys(list(first) + list(range(g.n))))
    for t1 in order:
        found = grow([t1], [])
        if found:
            return found
    return None


def is_strongly_chordal(g: Graph, max_witness: int = DEFAULT_WITNESS_CUTOFF) -> DoublyLexOrdering | Obstruction:
    """Gamma-free doubly lexical ordering of the closed-neighbourhood matrix, or a no.

    A "no" carries a hole (non-chordal input) or an induced k-sun with
    ``2k <= max_witness``; when the sun search is cut short the obstruction is
    returned with ``certified=False`` and no witness.
    """
    peo = chordality(g)
    if isinstance(peo, Obstruction):
        return peo
    mat = g.closed_neighborhood_matrix()
    dlo = doubly_lexical(mat)
    if dlo.gamma_free:
        return dlo
    gamma = find_gamma(mat, dlo.row_perm, dlo.col_perm)
    i, j, k, l = gamma
    hint = [dlo.row_perm[i], dlo.row_perm[j], dlo.col_perm[k], dlo.col_perm[l]]
    detail = f"doubly lexical ordering has a Gamma on vertices {hint}"
    try:
        sun = find_sun(g, max_witness // 2, first=hint)
    except _BudgetExceeded:
        sun = None
    if sun is None:
        return Obstruction("k_sun", (), certified=False, detail=detail + "; witness search refused")
    ts, ss = sun
    return Obstruction("k_sun", tuple(ts) + tuple(ss), detail=f"{len(ts)}-sun: clique first, then stable set")


# -- block graphs ---------------------------------------------------------------


def find_diamond(g: Graph) -> tuple[int, int, int, int] | None:
    """``(a, b, c, d)`` inducing K4 - e with the missing edge ad, or None."""
    for b, c in g.edges:
        common = sorted(g.adj[b] & g.adj[c])
        for i, a in enumerate(common):
            for d in common[i + 1 :]:
                if d not in g.adj[a]:
                    return a, b, c, d
    return None


def is_block_graph(g: Graph) -> CliqueSet | Obstruction:
    """Blocks (= maximal cliques) of a block graph, or a hole / diamond."""
    peo = chordality(g)
    if isinstance(peo, Obstruction):
        return peo
    dia = find_diamond(g)
    if dia is not None:
        return Obstruction("diamond", dia, detail="missing edge between first and last")
    return maximal_cliques(g, peo)


# -- split graphs ------------------------------------------------------------------


def find_split_obstruction(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """Induced 2K2, C4 or C5 (vertices in cycle order for cycles)."""
    es = g.edges
    for (a, b), (c, d) in combinations(es, 2):
        if len({a, b, c, d}) < 4:
            continue
        cross = (g.has_edge(a, c), g.has_edge(a, d), g.has_edge(b, c), g.has_edge(b, d))
        if cross == (False, False, False, False):
            return "2K2", (a, b, c, d)
        if cross == (True, False, False, True):
            return "C4", (a, b, d, c)
        if cross == (False, True, True, False):
            return "C4", (a, b, c, d)
    for b, c in es:
        for b_, c_ in ((b, c), (c, b)):
            for a in sorted(g.adj[b_] - g.adj[c_] - {c_}):
                for d in sorted(g.adj[c_] - g.adj[b_] - {b_}):
                    if d in g.adj[a]:
                        continue
                    for e in sorted(g.adj[a] & g.adj[d]):
                        if e not in g.adj[b_] and e not in g.adj[c_] and e not in (b_, c_):
                            return "C5", (a, b_, c_, d, e)
    return None


def is_split(g: Graph) -> SplitPartition | Obstruction:
    """Clique/stable partition via the degree-sequence test."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = 0
    for i, d in enumerate(deg, start=1):
        if d >= i - 1:
            m = i
    if sum(deg[:m]) == m * (m - 1) + sum(deg[m:]):
        q, s = sorted(order[:m]), sorted(order[m:])
        if not (g.is_clique(q) and g.is_stable(s)):
            raise AssertionError("split partition failed self-check")
        return SplitPartition(tuple(q), tuple(s))
    found = find_split_obstruction(g)
    if found is None:
        raise AssertionError("degree test rejected a graph without 2K2/C4/C5")
    name, verts = found
    return Obstruction("not_split", verts, detail=name)


# -- bipartite root classes ---------------------------------------------------


def _side_order(b: BipartiteGraph, side: str) -> SideOrdering | Obstruction:
    # ordering `side` so every opposite-side neighbourhood is an interval
    rows = b.yadj if side == "x" else b.biadj
    res = consecutive_ones(rows, b.size(side))
    if isinstance(res, Obstruction):
        return Obstruction("not_cop", res.witness, detail=f"neighbourhoods of these {'y' if side == 'x' else 'x'}-vertices")
    return SideOrdering(side, res.perm)


def is_convex_side(b: BipartiteGraph, side: str) -> bool:
    return not isinstance(_side_order(b, side), Obstruction)


def is_convex(b: BipartiteGraph) -> SideOrdering | Obstruction:
    """X-convex or Y-convex; the returned ordering names its side."""
    xs = _side_order(b, "x")
    if not isinstance(xs, Obstruction):
        return xs
    ys = _side_order(b, "y")
    if not isinstance(ys, Obstruction):
        return ys
    return Obstruction("not_cop", xs.witness, detail=f"neither side orderable; y-side rows {list(xs.witness)}, x-side rows {list(ys.witness)}")


def is_biconvex(b: BipartiteGraph) -> tuple[SideOrdering, SideOrdering] | Obstruction:
    xs = _side_order(b, "x")
    if isinstance(xs, Obstruction):
        return xs
    ys = _side_order(b, "y")
    if isinstance(ys, Obstruction):
        return ys
    return xs, ys


def check_side_ordering(b: BipartiteGraph, order: SideOrdering) -> bool:
    side = order.side
    if side not in ("x", "y") or sorted(order.perm) != list(range(b.size(side))):
        return False
    rows = b.yadj if side == "x" else b.biadj
    pos = order.position()
    for r in rows:
        ps = [pos[v] for v in r]
        if ps and max(ps) - min(ps) + 1 != len(ps):
            return False
    return True


def find_bipartite_hole(b: BipartiteGraph, max_len: int, budget: int = SEARCH_BUDGET) -> list[int] | None:
    """Induced cycle of length 6..max_len in ``b.as_graph()`` ids (Y shifted by nx)."""
    g = b.as_graph()
    adj = g.adj
    steps = [0]

    def extend(path: list[int], inpath: set[int]):
        steps[0] += 1
        if steps[0] > budget:
            raise _BudgetExceeded
        last, v0 = path[-1], path[0]
        for w in sorted(adj[last]):
            if w <= v0 or w in inpath:
                continue
            if any(p in adj[w] for p in path[1:-1]):
                continue
            if len(path) >= 2 and v0 in adj[w]:
                if len(path) + 1 >= 6:
                    return path + [w]
                continue
            if len(path) + 1 < max_len:
                found = extend(path + [w], inpath | {w})
                if found:
                    return found
        return None

    for v0 in range(g.n):
        found = extend([v0], {v0})
        if found:
            return found
    return None


def is_chordal_bipartite(b: BipartiteGraph, max_witness: int = DEFAULT_WITNESS_CUTOFF) -> DoublyLexOrdering | Obstruction:
    """Gamma-free doubly lexical ordering of the biadjacency matrix, or a no.

    Negative answers carry an induced cycle of length >= 6 (ids of
    ``b.as_graph()``) when one of length <= ``max_witness`` exists and the
    search fits its budget; otherwise ``certified=False``.
    """
    dlo = doubly_lexical(b.matrix())
    if dlo.gamma_free:
        return dlo
    try:
        cyc = find_bipartite_hole(b, max_witness)
    except _BudgetExceeded:
        cyc = None
    if cyc is None:
        return Obstruction("hole", (), certified=False, detail="Gamma in doubly lexical ordering; witness search refused")
    return Obstruction("hole", tuple(cyc), detail=f"induced C{len(cyc)}; y-vertices shifted by nx={b.nx}")


def is_star_convex(b: BipartiteGraph, side: str = "x") -> StarWitness | Obstruction:
    """Center on ``side`` lying in every opposite neighbourhood of size >= 2."""
    own = b.size(side)
    other = b.yadj if side == "x" else b.biadj
    big = [i for i, h in enumerate(other) if len(h) >= 2]
    common = set(range(own))
    for i in big:
        common &= other[i]
    if common:
        return StarWitness(side, min(common))
    if not big:
        return StarWitness(side, None)  # empty side: vacuous
    # greedy small witness set with empty intersection
    chosen: list[int] = []
    cur = set(range(own))
    while cur:
        best = min(big, key=lambda i: (len(cur & other[i]), i))
        chosen.append(best)
        cur &= other[best]
    return Obstruction("no_star_center", tuple(sorted(chosen)), detail=f"neighbourhoods of these {'y' if side == 'x' else 'x'}-vertices share no vertex")


def check_bisplit_partition(b: BipartiteGraph, p: BisplitPartition) -> str | None:
    """None if ``p`` satisfies the balanced bisplit conditions, else the violated one."""
    if b.nx != b.ny:
        return "sides differ in size"
    if sorted(p.x1 + p.x2) != list(range(b.nx)) or sorted(p.y1 + p.y2) != list(range(b.ny)):
        return "partition does not cover the sides"
    for x in p.x1:
        if len(b.biadj[x]) != b.ny:
            return f"x{x} in X1 misses part of Y"
    x2, y2 = set(p.x2), set(p.y2)
    inner = sorted((x, y) for x in p.x2 for y in b.biadj[x] if y in y2)
    if sorted(map(tuple, p.matching)) != inner:
        return "declared matching differs from B[X2, Y2]"
    xs = [x for x, _ in inner]
    ys = [y for _, y in inner]
    if sorted(xs) != sorted(x2) or sorted(ys) != sorted(y2):
        return "B[X2, Y2] is not a perfect matching"
    return None


def is_balanced_bisplit(b: BipartiteGraph) -> BisplitPartition | Obstruction:
    """Balanced bisplit partition, if any.

    A vertex of X2 adjacent to all of Y forces ``|X2| <= 1``, so X1 is the set
    of full vertices unless every X-vertex is full.
    """
    if b.nx != b.ny:
        return Obstruction("not_balanced_bisplit", detail=f"|X|={b.nx} != |Y|={b.ny}")
    full = [x for x in range(b.nx) if len(b.biadj[x]) == b.ny]
    candidates = [full]
    if len(full) == b.nx:
        candidates += [[x for x in full if x != z] for z in full]
    for x1 in candidates:
        x2 = [x for x in range(b.nx) if x not in set(x1)]
        x2set = set(x2)
        match = []
        taken = set()
        for x in x2:
            # private Y-vertex: its only X2-neighbour is x
            pick = next((y for y in sorted(b.biadj[x]) if y not in taken and (b.yadj[y] & x2set) == {x}), None)
            if pick is None:
                break
            taken.add(pick)
            match.append((x, pick))
        else:
            y2 = sorted(taken)
            y1 = [y for y in range(b.ny) if y not in taken]
            p = BisplitPartition(tuple(x1), tuple(x2), tuple(y1), tuple(y2), tuple(match))
            if check_bisplit_partition(b, p) is None:
                return p
    return Obstruction("not_balanced_bisplit", detail="no partition satisfies the biclique and matching conditions")


def is_tree(b: BipartiteGraph) -> bool:
    g = b.as_graph()
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_forest(b: BipartiteGraph) -> bool:
    g = b.as_graph()
    return g.m == g.n - len(components(g))
