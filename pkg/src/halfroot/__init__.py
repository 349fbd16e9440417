"""Certified half-square recognition for restricted bipartite root classes."""
from .certificates import (
    CLASS_TAGS,
    BisplitPartition,
    CliqueChain,
    DoublyLexOrdering,
    Obstruction,
    RecognitionOutcome,
    RootCertificate,
    SideOrdering,
    SplitPartition,
    StarWitness,
)
from .graph import (
    BipartiteGraph,
    CliqueSet,
    Graph,
    TwinPartition,
    components,
    half_square,
    maximal_cliques,
    subdivision,
    substitute,
    true_twin_classes,
    universal_vertices,
    vertex_clique_incidence,
)
from .halfsquare import (
    hs_biconvex,
    hs_chordal_bipartite,
    hs_convex,
    hs_star_biconvex,
    hs_star_convex,
    hs_tree,
    recognize,
    verify_root,
)

__version__ = "0.1.0"

__all__ = [
    "CLASS_TAGS",
    "BipartiteGraph",
    "BisplitPartition",
    "CliqueChain",
    "CliqueSet",
    "DoublyLexOrdering",
    "Graph",
    "Obstruction",
    "RecognitionOutcome",
    "RootCertificate",
    "SideOrdering",
    "SplitPartition",
    "StarWitness",
    "TwinPartition",
    "components",
    "half_square",
    "hs_biconvex",
    "hs_chordal_bipartite",
    "hs_convex",
    "hs_star_biconvex",
    "hs_star_convex",
    "hs_tree",
    "maximal_cliques",
    "recognize",
    "subdivision",
    "substitute",
    "true_twin_classes",
    "universal_vertices",
    "vertex_clique_incidence",
    "verify_root",
]
