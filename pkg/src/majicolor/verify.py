"""Checkers for majority-type and distinguishing colorings, with witnesses."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field

from .automorphism import Permutation, color_preserving_group, digraph_automorphism_group
from .coloring import ArcColoring, EdgeColoring, color_sort_key
from .graph import Digraph, Graph, edge


class IndexKind(str, enum.Enum):
    MAJORITY = "m"
    DISTINGUISHING = "d"
    MAJORITY_DISTINGUISHING = "md"
    PROPER_DISTINGUISHING = "chi-d"
    ARC_MAJORITY = "arc_majority"
    ARC_MAJORITY_DISTINGUISHING = "arc_majority_distinguishing"


@dataclass(frozen=True)
class Violation:
    vertex: int
    color: object
    count: int
    threshold: int
    side: str | None = None  # "in"/"out" for arc checks

    def to_json(self) -> dict:
        out = {"vertex": self.vertex, "color": self.color, "count": self.count,
               "threshold": self.threshold}
        if self.side:
            out["side"] = self.side
        return out


@dataclass(frozen=True)
class VerificationReport:
    mode: str
    violations: tuple[Violation, ...] = ()
    colors_used: int = 0
    witness: Permutation | None = field(default=None)

    @property
    def passed(self) -> bool:
        return not self.violations and self.witness is None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "mode": self.mode, "colors_used": self.colors_used,
               "violations": [v.to_json() for v in self.violations]}
        if self.witness is not None:
            out["witness_automorphism"] = list(self.witness.images)
        return out

    def __and__(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(f"{self.mode}+{other.mode}",
                                  self.violations + other.violations,
                                  max(self.colors_used, other.colors_used),
                                  self.witness or other.witness)


def _threshold(d: int, mode: str) -> int | None:
    """Largest allowed count of one color at a vertex of degree ``d``; None = exempt."""
    if mode == "strict":
        return d // 2
    if mode == "weak":
        return -(-d // 2)
    if mode == "almost":
        return None if d == 1 else d // 2
    raise ValueError(f"unknown majority mode {mode!r}")


def _vertex_tallies(g: Graph, c: EdgeColoring) -> list[Counter]:
    tallies = [Counter() for _ in range(g.n)]
    for (u, v), col in c.assignment.items():
        tallies[u][col] += 1
        tallies[v][col] += 1
    return tallies


def verify_majority(g: Graph, c: EdgeColoring, mode: str = "strict") -> VerificationReport:
    c.check_total(g)
    bad = []
    for v, tally in enumerate(_vertex_tallies(g, c)):
        limit = _threshold(g.degree(v), mode)
        if limit is None:
            continue
        for col in sorted(tally, key=color_sort_key):
            if tally[col] > limit:
                bad.append(Violation(v, col, tally[col], limit))
    return VerificationReport(mode, tuple(bad), c.colors_used)


def verify_distinguishing(g: Graph, c: EdgeColoring) -> VerificationReport:
    c.check_total(g)
    grp = color_preserving_group(g, c)
    return VerificationReport("distinguishing", (), c.colors_used, grp.nontrivial_element())


def verify_majority_distinguishing(g: Graph, c: EdgeColoring) -> VerificationReport:
    rep = verify_majority(g, c, "strict") & verify_distinguishing(g, c)
    return VerificationReport("majority_distinguishing", rep.violations, rep.colors_used, rep.witness)


def verify_proper(g: Graph, c: EdgeColoring) -> VerificationReport:
    """Every color at most once per vertex."""
    c.check_total(g)
    bad = []
    for v, tally in enumerate(_vertex_tallies(g, c)):
        for col in sorted(tally, key=color_sort_key):
            if tally[col] > 1:
                bad.append(Violation(v, col, tally[col], 1))
    return VerificationReport("proper", tuple(bad), c.colors_used)


def verify_arc_majority(d: Digraph, c: ArcColoring) -> VerificationReport:
    c.check_total(d)
    outs = [Counter() for _ in range(d.n)]
    ins = [Counter() for _ in range(d.n)]
    for (u, v), col in c.assignment.items():
        outs[u][col] += 1
        ins[v][col] += 1
    bad = []
    for v in range(d.n):
        for side, tally, deg in (("in", ins[v], d.in_degree(v)), ("out", outs[v], d.out_degree(v))):
            for col in sorted(tally, key=color_sort_key):
                if 2 * tally[col] > deg:
                    bad.append(Violation(v, col, tally[col], deg // 2, side))
    return VerificationReport("arc_majority", tuple(bad), c.colors_used)


def verify_arc_distinguishing(d: Digraph, c: ArcColoring) -> VerificationReport:
    c.check_total(d)
    grp = digraph_automorphism_group(d, c)
    return VerificationReport("arc_distinguishing", (), c.colors_used, grp.nontrivial_element())


def verify_arc_majority_distinguishing(d: Digraph, c: ArcColoring) -> VerificationReport:
    rep = verify_arc_majority(d, c) & verify_arc_distinguishing(d, c)
    return VerificationReport("arc_majority_distinguishing", rep.violations, rep.colors_used,
                              rep.witness)


def verify_kind(g, c, kind: IndexKind | str) -> VerificationReport:
    kind = IndexKind(kind)
    if kind is IndexKind.MAJORITY:
        return verify_majority(g, c, "strict")
    if kind is IndexKind.DISTINGUISHING:
        return verify_distinguishing(g, c)
    if kind is IndexKind.MAJORITY_DISTINGUISHING:
        return verify_majority_distinguishing(g, c)
    if kind is IndexKind.PROPER_DISTINGUISHING:
        rep = verify_proper(g, c) & verify_distinguishing(g, c)
        return VerificationReport("proper_distinguishing", rep.violations, rep.colors_used, rep.witness)
    if kind is IndexKind.ARC_MAJORITY:
        return verify_arc_majority(g, c)
    return verify_arc_majority_distinguishing(g, c)


def tallies(g: Graph, c: EdgeColoring, v: int) -> Counter:
    """Per-color count of edges at ``v``."""
    return Counter(c[edge(v, w)] for w in g.neighbors(v))
