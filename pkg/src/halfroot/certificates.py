"""Witness and certificate records plus their JSON form.

JSON layout (stable)::

    {"class": <tag>, "verdict": "yes"|"no",
     "witness_kind": <kind or null>, "orderings": [...], "center": ...,
     "partition": ..., "root": {"nx":..,"ny":..,"edges":[[x,y],..]},
     "obstruction": {"kind":..,"witness":[..],"certified":..,"detail":..}}
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .graph import BipartiteGraph

OBSTRUCTION_KINDS = frozenset(
    {
        "claw",
        "hole",
        "k_sun",
        "diamond",
        "extra_big_component",
        "no_universal_vertex",
        "non_split_quotient",
        "not_interval",
        "not_cop",
        # additions beyond the original closed set
        "not_split",
        "disconnected",
        "no_star_center",
        "not_balanced_bisplit",
        "induced_cycle",
    }
)

CLASS_TAGS = (
    "star_convex",
    "star_biconvex",
    "convex",
    "biconvex",
    "chordal_bipartite",
    "tree",
    "balanced_bisplit",
)


@dataclass(frozen=True)
class Obstruction:
    """Forbidden induced structure certifying a negative answer.

    ``certified`` is False for refusals: the answer is still "no", but the
    witness search was cut off and ``witness`` may be empty.
    """

    kind: str
    witness: tuple[int, ...] = ()
    certified: bool = True
    detail: str = ""

    def __post_init__(self):
        if self.kind not in OBSTRUCTION_KINDS:
            raise ValueError(f"unknown obstruction kind {self.kind!r}")

    def __bool__(self):
        # lets callers write ``if not result`` for failures
        return False

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": list(self.witness), "certified": self.certified, "detail": self.detail}

    @classmethod
    def from_json(cls, d: dict) -> "Obstruction":
        return cls(d["kind"], tuple(d.get("witness", ())), d.get("certified", True), d.get("detail", ""))


@dataclass(frozen=True)
class SideOrdering:
    side: str
    perm: tuple[int, ...]

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.perm)}

    def to_json(self) -> dict:
        return {"side": self.side, "perm": list(self.perm)}

    @classmethod
    def from_json(cls, d: dict) -> "SideOrdering":
        return cls(d["side"], tuple(d["perm"]))


@dataclass(frozen=True)
class DoublyLexOrdering:
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    gamma_free: bool

    def to_json(self) -> dict:
        return {"row_perm": list(self.row_perm), "col_perm": list(self.col_perm), "gamma_free": self.gamma_free}

    @classmethod
    def from_json(cls, d: dict) -> "DoublyLexOrdering":
        return cls(tuple(d["row_perm"]), tuple(d["col_perm"]), bool(d["gamma_free"]))


@dataclass(frozen=True)
class CliqueChain:
    """Maximal cliques in consecutive order, with 0-based first/last indices per vertex."""

    order: tuple[tuple[int, ...], ...]
    left: tuple[int, ...]
    right: tuple[int, ...]

    def to_json(self) -> dict:
        return {"order": [list(q) for q in self.order], "left": list(self.left), "right": list(self.right)}


@dataclass(frozen=True)
class SplitPartition:
    clique_side: tuple[int, ...]
    stable_side: tuple[int, ...]


@dataclass(frozen=True)
class BisplitPartition:
    x1: tuple[int, ...]
    x2: tuple[int, ...]
    y1: tuple[int, ...]
    y2: tuple[int, ...]
    matching: tuple[tuple[int, int], ...]  # (x, y) pairs, x in x2, y in y2

    def to_json(self) -> dict:
        return {
            "x1": list(self.x1),
            "x2": list(self.x2),
            "y1": list(self.y1),
            "y2": list(self.y2),
            "matching": [list(p) for p in self.matching],
        }

    @classmethod
    def from_json(cls, d: dict) -> "BisplitPartition":
        return cls(
            tuple(d["x1"]), tuple(d["x2"]), tuple(d["y1"]), tuple(d["y2"]), tuple(tuple(p) for p in d["matching"])
        )


@dataclass(frozen=True)
class StarWitness:
    """Star center on one side of the root; ``center`` is None only for an empty side."""

    side: str
    center: int | None

    def to_json(self) -> dict:
        return {"side": self.side, "center": self.center}

    @classmethod
    def from_json(cls, d: dict) -> "StarWitness":
        return cls(d["side"], d["center"])


@dataclass(frozen=True)
class RootCertificate:
    """A half-root whose X side is the vertex set of the input graph.

    ``witness`` depends on ``class_tag``:

    - star_convex: ``(StarWitness,)``
    - star_biconvex: ``(StarWitness on x, StarWitness on y)``
    - convex: ``(SideOrdering,)`` for one side
    - biconvex: ``(SideOrdering x, SideOrdering y)``
    - chordal_bipartite: ``(DoublyLexOrdering,)`` of the biadjacency matrix
    - tree: ``("tree",)`` or ``("forest",)``
    - balanced_bisplit: ``(BisplitPartition,)``
    """

    root: BipartiteGraph
    class_tag: str
    witness: tuple[Any, ...]
    construction: str = ""

    def to_json(self) -> dict:
        d: dict[str, Any] = {
            "class": self.class_tag,
            "root": bipartite_to_json(self.root),
            "construction": self.construction,
            "witness_kind": None,
            "orderings": [],
            "center": None,
            "partition": None,
        }
        tag = self.class_tag
        if tag in ("star_convex", "star_biconvex"):
            d["witness_kind"] = "star_center"
            d["center"] = [w.to_json() for w in self.witness]
        elif tag in ("convex", "biconvex"):
            d["witness_kind"] = "side_ordering"
            d["orderings"] = [w.to_json() for w in self.witness]
        elif tag == "chordal_bipartite":
            d["witness_kind"] = "doubly_lexical"
            d["orderings"] = [w.to_json() for w in self.witness]
        elif tag == "tree":
            d["witness_kind"] = self.witness[0]
        elif tag == "balanced_bisplit":
            d["witness_kind"] = "bisplit_partition"
            d["partition"] = self.witness[0].to_json()
        return d

    @classmethod
    def from_json(cls, d: dict) -> "RootCertificate":
        tag = d["class"]
        if tag not in CLASS_TAGS:
            raise ValueError(f"unknown class tag {tag!r}")
        root = bipartite_from_json(d["root"])
        if tag in ("star_convex", "star_biconvex"):
            witness = tuple(StarWitness.from_json(w) for w in d["center"])
        elif tag in ("convex", "biconvex"):
            witness = tuple(SideOrdering.from_json(w) for w in d["orderings"])
        elif tag == "chordal_bipartite":
            witness = tuple(DoublyLexOrdering.from_json(w) for w in d["orderings"])
        elif tag == "tree":
            witness = (d["witness_kind"],)
        else:
            witness = (BisplitPartition.from_json(d["partition"]),)
        return cls(root, tag, witness, d.get("construction", ""))


@dataclass(frozen=True)
class RecognitionOutcome:
    class_tag: str
    certificate: RootCertificate | None = None
    obstruction: Obstruction | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if (self.certificate is None) == (self.obstruction is None):
            raise ValueError("exactly one of certificate / obstruction must be set")

    @property
    def verdict(self) -> bool:
        return self.certificate is not None

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        if self.certificate is not None:
            d = self.certificate.to_json()
            d["verdict"] = "yes"
            d["obstruction"] = None
        else:
            d = {
                "class": self.class_tag,
                "verdict": "no",
                "witness_kind": self.obstruction.kind,
                "orderings": [],
                "center": None,
                "partition": None,
                "root": None,
                "obstruction": self.obstruction.to_json(),
            }
        if self.notes:
            d["notes"] = list(self.notes)
        return d


def bipartite_to_json(b: BipartiteGraph) -> dict:
    return {"nx": b.nx, "ny": b.ny, "edges": [list(e) for e in b.edges]}


def bipartite_from_json(d: dict) -> BipartiteGraph:
    return BipartiteGraph.from_edges(int(d["nx"]), int(d["ny"]), (tuple(e) for e in d["edges"]))


def dumps(obj: Any) -> str:
    """Deterministic JSON text for certificates and outcomes."""
    if hasattr(obj, "to_json"):
        obj = obj.to_json()
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
