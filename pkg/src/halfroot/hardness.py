"""Edge clique cover: exact solver, the universal-vertex gadget, and both
directions of the cover <-> balanced bisplit root correspondence."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .certificates import BisplitPartition, Obstruction
from .graph import BipartiteGraph, Graph, half_square, is_connected, universal_vertices
from .recognition import check_bisplit_partition, is_balanced_bisplit


class AssumptionError(ValueError):
    """A documented precondition of the reduction does not hold.

    ``token`` is a stable machine-readable name for the violated assumption.
    """

    def __init__(self, token: str, message: str):
        super().__init__(f"{token}: {message}")
        self.token = token


@dataclass(frozen=True)
class EccInstance:
    g: Graph
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def to_json(self) -> list:
        return [list(q) for q in self.cliques]

    @classmethod
    def from_json(cls, data) -> "CliqueCover":
        return cls(tuple(tuple(sorted(int(v) for v in q)) for q in data))


@dataclass(frozen=True)
class ReductionOutput:
    g_prime: Graph
    u_set: tuple[int, ...]
    n_original: int


@dataclass(frozen=True)
class BalancedBisplitRoot:
    b: BipartiteGraph
    partition: BisplitPartition

    @property
    def x1(self):
        return self.partition.x1

    @property
    def x2(self):
        return self.partition.x2

    @property
    def y1(self):
        return self.partition.y1

    @property
    def y2(self):
        return self.partition.y2

    @property
    def matching(self):
        return self.partition.matching


def cover_problem(g: Graph, cover: Sequence[Sequence[int]]) -> str | None:
    """None if ``cover`` is a set of cliques covering every edge of ``g``."""
    covered = set()
    for q in cover:
        q = sorted(set(q))
        if any(not 0 <= v < g.n for v in q):
            return f"clique {q} has a vertex outside the graph"
        if not g.is_clique(q):
            return f"{q} is not a clique"
        covered.update((a, b) for i, a in enumerate(q) for b in q[i + 1 :])
    missing = [e for e in g.edges if e not in covered]
    if missing:
        return f"edge {missing[0]} is not covered"
    return None


def _maximalize(g: Graph, q: set[int]) -> tuple[int, ...]:
    q = set(q)
    for v in range(g.n):
        if v not in q and all(u in g.adj[v] for u in q):
            q.add(v)
    return tuple(sorted(q))


def solve_ecc(inst: EccInstance) -> CliqueCover | None:
    """Cover the edges of ``inst.g`` with at most ``k`` cliques, or None.

    Branch and bound over edges in sorted order: each uncovered edge joins an
    open clique it is compatible with, or opens the next one. Opening only the
    lowest unused slot removes the symmetry between clique labels. The search
    order is fixed, so the answer is deterministic. Every returned clique is
    extended to a maximal clique.
    """
    g, k = inst.g, inst.k
    edges = g.edges
    if not edges:
        return CliqueCover(())
    cliques: list[set[int]] = []

    def covered(e):
        return any(e[0] in q and e[1] in q for q in cliques)

    def rec(i: int) -> bool:
        while i < len(edges) and covered(edges[i]):
            i += 1
        if i == len(edges):
            return True
        a, b = edges[i]
        for q in cliques:
            add = {a, b} - q
            if all(v in g.adj[u] for v in add for u in q if u != v):
                q |= add
                if rec(i + 1):
                    return True
                q -= add
        if len(cliques) < k:
            cliques.append({a, b})
            if rec(i + 1):
                return True
            cliques.pop()
        return False

    if not rec(0):
        return None
    return CliqueCover(tuple(_maximalize(g, q) for q in cliques))


def reduce_ecc(inst: EccInstance) -> ReductionOutput:
    """Add ``k`` new pairwise adjacent vertices joined to every old vertex.

    The instance must be connected, have no universal vertex and satisfy
    ``k <= |E|``; otherwise an AssumptionError names the violated condition.
    """
    g, k = inst.g, inst.k
    if g.n == 0 or not is_connected(g):
        raise AssumptionError("assumption_connected", "the graph must be connected and non-empty")
    uni = universal_vertices(g)
    if uni:
        raise AssumptionError("assumption_no_universal", f"vertex {uni[0]} is universal (see strip_universal)")
    if k > g.m:
        raise AssumptionError("assumption_k_le_edges", f"k={k} exceeds the edge count {g.m}")
    n = g.n
    u_set = tuple(range(n, n + k))
    edges = list(g.edges)
    edges += [(a, b) for i, a in enumerate(u_set) for b in u_set[i + 1 :]]
    edges += [(v, u) for u in u_set for v in range(n)]
    labels = tuple(g.labels) + tuple(f"u{i}" for i in range(k)) if g.labels else None
    gp = Graph.from_edges(n + k, edges, labels=labels)
    if sorted(universal_vertices(gp)) != list(u_set):
        raise AssertionError("added vertices are not exactly the universal ones")
    return ReductionOutput(gp, u_set, n)


def strip_universal(g: Graph, k: int) -> tuple[Graph, int, list[int]]:
    """Delete universal vertices; return the rest, ``k`` unchanged, and the removed ids.

    Not applied automatically: deciding how ``k`` should change is left to
    the caller.
    """
    uni = universal_vertices(g)
    keep = [v for v in range(g.n) if v not in set(uni)]
    return g.induced(keep), k, uni


def build_root_from_cover(red: ReductionOutput, cover: CliqueCover) -> BalancedBisplitRoot:
    """Balanced bisplit half-root of ``red.g_prime`` from a cover of the original graph.

    Y ids: ``w_i = i`` for the k cover cliques, ``w_v = k + v`` for the
    matching partners. A cover with fewer than k cliques is padded by repeating
    its last clique.
    """
    n, k = red.n_original, len(red.u_set)
    g = red.g_prime.induced(range(n))
    why = cover_problem(g, cover.cliques)
    if why is not None:
        raise ValueError(f"invalid cover: {why}")
    cl = list(cover.cliques)
    if len(cl) > k:
        raise ValueError(f"cover has {len(cl)} cliques, gadget has k={k}")
    if not cl:
        cl = [()]
    while len(cl) < k:
        cl.append(cl[-1])
    ny = k + n
    edges = [(u, w) for u in red.u_set for w in range(ny)]
    edges += [(v, k + v) for v in range(n)]
    edges += [(v, i) for i, q in enumerate(cl) for v in q]
    b = BipartiteGraph.from_edges(n + k, ny, edges)
    part = BisplitPartition(
        tuple(red.u_set),
        tuple(range(n)),
        tuple(range(k)),
        tuple(range(k, ny)),
        tuple((v, k + v) for v in range(n)),
    )
    why = check_bisplit_partition(b, part)
    if why is not None:
        raise AssertionError(f"constructed root is not balanced bisplit: {why}")
    if half_square(b, "x") != red.g_prime:
        raise AssertionError("constructed root does not reproduce the gadget")
    return BalancedBisplitRoot(b, part)


def extract_cover_from_root(red: ReductionOutput, root: BalancedBisplitRoot | BipartiteGraph) -> CliqueCover:
    """k cliques ``N(q) & V`` for q in Y1, covering the original edges.

    A bare BipartiteGraph is accepted; its partition is then recovered.
    """
    if isinstance(root, BipartiteGraph):
        part = is_balanced_bisplit(root)
        if isinstance(part, Obstruction):
            raise ValueError("root is not balanced bisplit")
        root = BalancedBisplitRoot(root, part)
    b = root.b
    why = check_bisplit_partition(b, root.partition)
    if why is not None:
        raise ValueError(f"root violates the balanced bisplit conditions: {why}")
    if b.nx != red.g_prime.n or half_square(b, "x") != red.g_prime:
        raise ValueError("root is not a half-root of the gadget")
    n, k = red.n_original, len(red.u_set)
    x1 = set(root.x1)
    if not x1 <= set(red.u_set):
        # X1 vertices are universal in the half-square, and only U is universal
        raise ValueError(f"X1 = {sorted(x1)} is not inside U")
    # an edge of the original graph cannot come from Y2: each Y2 vertex has one X2 neighbour
    cliques = [tuple(sorted(v for v in b.yadj[q] if v < n)) for q in root.y1]
    if len(cliques) > k:
        raise AssertionError(f"|Y1| = {len(cliques)} exceeds k = {k}")
    while cliques and len(cliques) < k:
        cliques.append(cliques[-1])
    cliques = tuple(cliques)
    g = red.g_prime.induced(range(n))
    why = cover_problem(g, cliques)
    if why is not None:
        raise AssertionError(f"extracted cliques do not cover: {why}")
    return CliqueCover(cliques)
