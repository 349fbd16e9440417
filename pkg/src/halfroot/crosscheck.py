"""Recognizers against brute-force oracles over exhaustive graph families."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import oracle
from .graph import Graph
from .halfsquare import hs_tree, recognize, verify_root

# class tag -> definition-level oracle for "G is a half-square of that class"
CLASS_ORACLES: dict[str, Callable[[Graph], bool]] = {
    "convex": oracle.brute_interval,
    "biconvex": oracle.brute_unit_interval,
    "chordal_bipartite": oracle.brute_strongly_chordal,
    "tree": oracle.brute_connected_block,
    "star_convex": oracle.star_convex_condition,
    "star_biconvex": oracle.star_biconvex_condition,
    "balanced_bisplit": lambda g: oracle.brute_root_search(g, "balanced_bisplit", prune=False) is not None,
}


@dataclass
class SweepReport:
    class_tag: str
    checked: int = 0
    yes: int = 0
    refused: int = 0
    disagreements: list[tuple[Graph, bool, bool]] = field(default_factory=list)
    unsound: list[tuple[Graph, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.unsound

    def lines(self) -> list[str]:
        out = [
            f"class={self.class_tag} checked={self.checked} yes={self.yes} refused={self.refused} "
            f"disagreements={len(self.disagreements)} unsound={len(self.unsound)}"
        ]
        for g, got, want in self.disagreements:
            out.append(f"disagree n={g.n} edges={list(g.edges)} recognizer={got} oracle={want}")
        for g, why in self.unsound:
            out.append(f"unsound n={g.n} edges={list(g.edges)} reason={why}")
        return out


def check_graph(g: Graph, class_tag: str, report: SweepReport, forest: bool = False) -> None:
    out = hs_tree(g, forest=True) if (class_tag == "tree" and forest) else recognize(g, class_tag)
    report.checked += 1
    if out.verdict:
        report.yes += 1
        res = verify_root(g, out.certificate, forest=forest)
        if not res:
            report.unsound.append((g, res.reason))
    try:
        if class_tag == "tree" and forest:
            want = oracle.brute_block(g)
        else:
            want = CLASS_ORACLES[class_tag](g)
    except oracle.OracleRefusal:
        report.refused += 1
        return
    if want != out.verdict:
        report.disagreements.append((g, out.verdict, want))


def sweep(class_tag: str, graphs: Iterable[Graph], forest: bool = False) -> SweepReport:
    report = SweepReport(class_tag)
    for g in graphs:
        check_graph(g, class_tag, report, forest=forest)
    return report


def all_graphs_upto(n: int, connected_only: bool = False) -> Iterable[Graph]:
    for k in range(n + 1):
        yield from oracle.enumerate_graphs(k, connected_only=connected_only)
