"""Half-square recognition with explicit half-roots.

Each ``hs_*`` function decides whether a graph ``G`` is the half-square
``B^2[V]`` of some bipartite ``B = (V, W)`` in a root class and, if so,
builds ``B`` (X side = V, Y side = W) with a class witness. Every constructed
root is re-verified before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass

from .certificates import (
    CLASS_TAGS,
    DoublyLexOrdering,
    Obstruction,
    RecognitionOutcome,
    RootCertificate,
    SideOrdering,
    StarWitness,
)
from .graph import (
    BipartiteGraph,
    Graph,
    big_components,
    components,
    half_square,
    maximal_cliques,
    twin_quotient,
    vertex_clique_incidence,
)
from .ordering import doubly_lexical, find_gamma, is_doubly_lexical
from .recognition import (
    check_bisplit_partition,
    check_side_ordering,
    interval_model,
    is_block_graph,
    is_forest,
    is_split,
    is_strongly_chordal,
    is_tree,
    is_unit_interval,
)


class RootVerificationError(AssertionError):
    """A constructed root failed its own certificate check."""


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def _yes(g: Graph, cert: RootCertificate, forest: bool = False) -> RecognitionOutcome:
    res = verify_root(g, cert, forest=forest)
    if not res:
        raise RootVerificationError(f"{cert.class_tag} root rejected: {res.reason}")
    return RecognitionOutcome(cert.class_tag, certificate=cert)


def _no(tag: str, obs: Obstruction) -> RecognitionOutcome:
    return RecognitionOutcome(tag, obstruction=obs)


# -- star convex / star biconvex ---------------------------------------------------


def _component_root(g: Graph) -> RootCertificate | None:
    """Root for "at most one big component, and it has a universal vertex"."""
    bigs = big_components(g)
    if len(bigs) > 1:
        return None
    if not bigs:
        if g.n == 0:
            return None
        # no edges: nothing to cover
        root = BipartiteGraph.from_edges(g.n, 0, ())
        return RootCertificate(root, "star_convex", (StarWitness("x", 0),), "edgeless")
    big = bigs[0]
    universal = [v for v in big if g.degree(v) == len(big) - 1]
    if not universal:
        return None
    uset = set(universal)
    rest = [v for v in big if v not in uset]
    if not rest:
        root = BipartiteGraph.from_y_neighborhoods(g.n, [universal])
    else:
        # Y = one private copy per remaining vertex, then the edges among them
        rset = set(rest)
        sub_edges = [(a, b) for a, b in g.edges if a in rset and b in rset]
        hoods = [universal + [x] for x in rest]
        hoods += [universal + [a, b] for a, b in sub_edges]
        root = BipartiteGraph.from_y_neighborhoods(g.n, hoods)
    return RootCertificate(root, "star_convex", (StarWitness("x", universal[0]),), "universal-vertex")


def _split_quotient_root(g: Graph, clique_side, stable_side, reps) -> BipartiteGraph:
    """Root over the twin quotient's split partition, twins re-expanded.

    Y-vertex 0 sees the clique side; Y-vertex ``1 + i`` belongs to the i-th
    stable vertex ``s`` and sees ``s`` together with its neighbours.
    """
    rep_of = {g.closed(r): r for r in reps}
    q_of = {v: rep_of[g.closed(v)] for v in range(g.n)}
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(q_of[v], []).append(v)
    clique_side = set(clique_side)
    stable = sorted(stable_side)
    hoods: list[list[int]] = [[v for r in sorted(clique_side) for v in classes[r]]]
    for s in stable:
        members = set(classes[s])
        for r in g.adj[s]:
            members.update(classes[q_of[r]])
        hoods.append(sorted(members))
    return BipartiteGraph.from_y_neighborhoods(g.n, hoods)


def hs_star_convex(g: Graph) -> RecognitionOutcome:
    """Half-square of a star convex bipartite graph?

    Yes iff at most one component is big and it has a universal vertex, or the
    true-twin quotient is a split graph.
    """
    if g.n == 0:
        root = BipartiteGraph.from_edges(0, 0, ())
        return _yes(g, RootCertificate(root, "star_convex", (StarWitness("x", None),), "empty"))
    cert = _component_root(g)
    if cert is not None:
        return _yes(g, cert)
    q, reps = twin_quotient(g)
    sp = is_split(q)
    if not isinstance(sp, Obstruction):
        clique_side = [reps[i] for i in sp.clique_side]
        stable_side = [reps[i] for i in sp.stable_side]
        root = _split_quotient_root(g, clique_side, stable_side, reps)
        return _yes(g, RootCertificate(root, "star_convex", (StarWitness("y", 0),), "split-quotient"))
    bigs = big_components(g)
    why = f"{len(bigs)} big components" if len(bigs) > 1 else "big component has no universal vertex"
    witness = tuple(reps[i] for i in sp.witness)
    return _no("star_convex", Obstruction("non_split_quotient", witness, detail=f"{sp.detail} in twin quotient; {why}"))


def hs_star_biconvex(g: Graph) -> RecognitionOutcome:
    """Half-square of a star biconvex bipartite graph?

    Yes iff at most one component is big and the twin quotient of the big
    component is a split graph with a universal vertex.
    """
    if g.n == 0:
        root = BipartiteGraph.from_edges(0, 0, ())
        wit = (StarWitness("x", None), StarWitness("y", None))
        return _yes(g, RootCertificate(root, "star_biconvex", wit, "empty"))
    bigs = big_components(g)
    if len(bigs) > 1:
        a, b = bigs[0][0], min(g.adj[bigs[0][0]])
        c, d = bigs[1][0], min(g.adj[bigs[1][0]])
        return _no("star_biconvex", Obstruction("extra_big_component", (a, b, c, d), detail="edges from two components"))
    q, reps = twin_quotient(g)
    sp = is_split(q)
    if isinstance(sp, Obstruction):
        witness = tuple(reps[i] for i in sp.witness)
        return _no("star_biconvex", Obstruction("non_split_quotient", witness, detail=f"{sp.detail} in twin quotient"))
    big = set(bigs[0]) if bigs else set()
    if big:
        qbig = [i for i in range(q.n) if reps[i] in big]
        uq = [i for i in qbig if q.degree(i) == len(qbig) - 1]
        if not uq:
            pairs = []
            for i in qbig:
                miss = min(j for j in qbig if j != i and j not in q.adj[i])
                pairs += [reps[i], reps[miss]]
            return _no("star_biconvex", Obstruction("no_universal_vertex", tuple(pairs), detail="pairs (v, non-neighbour of v)"))
        u = uq[0]
        clique_side = {i for i in sp.clique_side if reps[i] in big} | {u}
        center = reps[u]
    else:
        clique_side = set()
        center = 0
    stable_side = [i for i in range(q.n) if i not in clique_side]
    root = _split_quotient_root(g, [reps[i] for i in clique_side], [reps[i] for i in stable_side], reps)
    wit = (StarWitness("x", center), StarWitness("y", 0))
    return _yes(g, RootCertificate(root, "star_biconvex", wit, "split-quotient"))


# -- convex / biconvex -------------------------------------------------------


def _chain_root(g: Graph, order) -> BipartiteGraph:
    return BipartiteGraph.from_y_neighborhoods(g.n, list(order))


def hs_convex(g: Graph) -> RecognitionOutcome:
    """Yes iff interval; root = vertex-clique incidence with cliques in chain order."""
    chain = interval_model(g)
    if isinstance(chain, Obstruction):
        return _no("convex", chain)
    root = _chain_root(g, chain.order)
    wit = (SideOrdering("y", tuple(range(root.ny))),)
    return _yes(g, RootCertificate(root, "convex", wit, "clique-chain"))


def biconvex_vertex_order(chain) -> tuple[int, ...]:
    """Vertices sorted by (first clique, last clique, id)."""
    n = len(chain.left)
    return tuple(sorted(range(n), key=lambda v: (chain.left[v], chain.right[v], v)))


def hs_biconvex(g: Graph) -> RecognitionOutcome:
    """Yes iff unit interval; X side ordered by (first clique, last clique)."""
    chain = is_unit_interval(g)
    if isinstance(chain, Obstruction):
        return _no("biconvex", chain)
    root = _chain_root(g, chain.order)
    wit = (SideOrdering("x", biconvex_vertex_order(chain)), SideOrdering("y", tuple(range(root.ny))))
    return _yes(g, RootCertificate(root, "biconvex", wit, "clique-chain"))


# -- chordal bipartite / tree -------------------------------------------------


def hs_chordal_bipartite(g: Graph) -> RecognitionOutcome:
    """Yes iff strongly chordal; root = vertex-clique incidence graph."""
    res = is_strongly_chordal(g)
    if isinstance(res, Obstruction):
        return _no("chordal_bipartite", res)
    root = vertex_clique_incidence(g)
    dlo = doubly_lexical(root.matrix())
    if not dlo.gamma_free:
        raise RootVerificationError("incidence graph of a strongly chordal graph is not chordal bipartite")
    return _yes(g, RootCertificate(root, "chordal_bipartite", (dlo,), "vertex-clique incidence"))


def hs_tree(g: Graph, forest: bool = False) -> RecognitionOutcome:
    """Yes iff a connected block graph (``forest=True``: any block graph, forest root)."""
    blocks = is_block_graph(g)
    if isinstance(blocks, Obstruction):
        return _no("tree", blocks)
    comps = components(g)
    if not forest and len(comps) > 1:
        return _no("tree", Obstruction("disconnected", (comps[0][0], comps[1][0]), detail="tree roots have connected half-squares"))
    root = vertex_clique_incidence(g, blocks)
    kind = "forest" if forest else "tree"
    return _yes(g, RootCertificate(root, "tree", (kind,), "vertex-clique incidence"), forest=forest)


# -- verification ---------------------------------------------------------------


def _check_star(root: BipartiteGraph, w: StarWitness) -> str | None:
    if w.side not in ("x", "y"):
        return f"bad side {w.side!r}"
    size = root.size(w.side)
    other = root.yadj if w.side == "x" else root.biadj
    if w.center is None:
        return None if size == 0 else "missing star center"
    if not 0 <= w.center < size:
        return f"center {w.center} out of range"
    for i, h in enumerate(other):
        if len(h) >= 2 and w.center not in h:
            return f"neighbourhood of {'y' if w.side == 'x' else 'x'}{i} misses center {w.center}"
    return None


def _check_witness(cert: RootCertificate, forest: bool) -> str | None:
    root, tag, wit = cert.root, cert.class_tag, cert.witness
    if tag == "star_convex":
        if len(wit) != 1 or not isinstance(wit[0], StarWitness):
            return "expected one star witness"
        return _check_star(root, wit[0])
    if tag == "star_biconvex":
        if len(wit) != 2 or {w.side for w in wit} != {"x", "y"}:
            return "expected star witnesses on both sides"
        return _check_star(root, wit[0]) or _check_star(root, wit[1])
    if tag == "convex":
        if len(wit) != 1 or not isinstance(wit[0], SideOrdering):
            return "expected one side ordering"
        return None if check_side_ordering(root, wit[0]) else "side ordering does not make neighbourhoods intervals"
    if tag == "biconvex":
        if len(wit) != 2 or {w.side for w in wit} != {"x", "y"}:
            return "expected orderings for both sides"
        for w in wit:
            if not check_side_ordering(root, w):
                return f"{w.side}-ordering does not make neighbourhoods intervals"
        return None
    if tag == "chordal_bipartite":
        if len(wit) != 1 or not isinstance(wit[0], DoublyLexOrdering):
            return "expected a doubly lexical ordering"
        d = wit[0]
        mat = root.matrix()
        if not is_doubly_lexical(mat, d.row_perm, d.col_perm):
            return "ordering is not doubly lexical"
        if not d.gamma_free or find_gamma(mat, d.row_perm, d.col_perm) is not None:
            return "ordering contains a Gamma"
        return None
    if tag == "tree":
        kind = wit[0] if wit else None
        if root.nx + root.ny == 0:
            return None
        if kind == "tree":
            return None if is_tree(root) else "root is not a tree"
        if kind == "forest" and forest:
            return None if is_forest(root) else "root is not a forest"
        return f"tree witness {kind!r} not accepted here"
    if tag == "balanced_bisplit":
        return check_bisplit_partition(root, wit[0])
    return f"unknown class {tag!r}"


def verify_root(g: Graph, cert: RootCertificate, forest: bool = False) -> Verification:
    """Check ``half_square(root, X) == g`` exactly and the class witness.

    Raises ValueError if the root's X side does not have ``g.n`` vertices.
    """
    if cert.root.nx != g.n:
        raise ValueError(f"root X side has {cert.root.nx} vertices, graph has {g.n}")
    if half_square(cert.root, "x") != g:
        return Verification(False, "half-square of root differs from graph")
    why = _check_witness(cert, forest)
    return Verification(why is None, why or "")


RECOGNIZERS = {
    "star_convex": hs_star_convex,
    "star_biconvex": hs_star_biconvex,
    "convex": hs_convex,
    "biconvex": hs_biconvex,
    "chordal_bipartite": hs_chordal_bipartite,
    "tree": hs_tree,
}


def recognize(g: Graph, class_tag: str, forest: bool = False) -> RecognitionOutcome:
    if class_tag not in CLASS_TAGS:
        raise ValueError(f"unknown class {class_tag!r}")
    if class_tag == "tree":
        return hs_tree(g, forest=forest)
    if class_tag == "balanced_bisplit":
        from .oracle import brute_root_search

        root = brute_root_search(g, "balanced_bisplit")
        if root is None:
            return _no("balanced_bisplit", Obstruction("not_balanced_bisplit", detail="exhaustive search found no root"))
        from .recognition import is_balanced_bisplit

        part = is_balanced_bisplit(root)
        return _yes(g, RootCertificate(root, "balanced_bisplit", (part,), "exhaustive search"))
    return RECOGNIZERS[class_tag](g)
