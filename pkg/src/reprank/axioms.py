"""Ranking axioms and their checkers.

Each axiom is a universally quantified condition over ordered pairs of
distinct agents. ``check`` evaluates one axiom on a (graph, ranking) pair
and reports the first violating pair in lexicographic order, with a
human-readable reason that can be re-verified.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import AbstractSet, Callable

from . import dominance
from .errors import ModeError, NodeSetMismatchError
from .graphs import Feedback, Mode, ReputationGraph
from .rankings import Ranking


class Axiom(enum.Enum):
    """The supported ranking axioms.

    T, M, VWM constrain positive-feedback rankings; BT, BM the negative
    counterparts; TC, MC the combined-feedback setting.
    """

    T = "T"
    M = "M"
    VWM = "VWM"
    BT = "BT"
    BM = "BM"
    TC = "Tc"
    MC = "Mc"

    @classmethod
    def from_name(cls, name: str) -> "Axiom":
        try:
            return _AXIOMS_BY_NAME[name.casefold()]
        except KeyError:
            known = ", ".join(a.value for a in cls)
            raise ValueError(f"unknown axiom {name!r} (known: {known})") from None


_AXIOMS_BY_NAME = {a.value.casefold(): a for a in Axiom}

AXIOMS_BY_MODE: dict[Mode, tuple[Axiom, ...]] = {
    Mode.POSITIVE_ONLY: (Axiom.T, Axiom.M, Axiom.VWM),
    Mode.NEGATIVE_ONLY: (Axiom.BT, Axiom.BM),
    Mode.COMBINED: (Axiom.TC, Axiom.MC),
}


@dataclass(frozen=True)
class Witness:
    """A concrete ordered pair violating an axiom, with the reason."""

    vi: str
    vj: str
    reason: str


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking one axiom; carries a witness iff it failed."""

    axiom: Axiom
    passed: bool
    witness: Witness | None = None

    def render_text(self) -> str:
        if self.passed:
            return f"{self.axiom.value} pass"
        w = self.witness
        return f"{self.axiom.value} fail [witness: ({w.vi},{w.vj}) {w.reason}]"


def _exists_strict_pair(
    ranking: Ranking, above: AbstractSet[str], below: AbstractSet[str]
) -> bool:
    if not above or not below:
        return False
    return min(ranking.rank_of(a) for a in above) < max(
        ranking.rank_of(b) for b in below
    )


def _violates_t(g: ReputationGraph, r: Ranking, vi: str, vj: str) -> str | None:
    ri, rj = g.support_set(vi), g.support_set(vj)
    if dominance.more_important(r, ri, rj) and r.rank_of(vi) >= r.rank_of(vj):
        return "supporters dominate but the node is not ranked strictly higher"
    return None


def _violates_m(g: ReputationGraph, r: Ranking, vi: str, vj: str) -> str | None:
    if r.rank_of(vi) >= r.rank_of(vj):
        return None
    ri, rj = g.support_set(vi), g.support_set(vj)
    if dominance.more_important(r, ri, rj):
        return None
    if _exists_strict_pair(r, ri, rj):
        return None
    return (
        "ranked strictly higher without supporter dominance and no supporter "
        "outranks any supporter of the lower node"
    )


def _violates_vwm(g: ReputationGraph, r: Ranking, vi: str, vj: str) -> str | None:
    if len(g.support_set(vi)) > len(g.support_set(vj)) + 1:
        return None
    reason = _violates_m(g, r, vi, vj)
    if reason is None:
        return None
    return "support sizes within one apart and " + reason


def _violates_bt(g: ReputationGraph, r: Ranking, vi: str, vj: str) -> str | None:
    ri, rj = g.support_set(vi), g.support_set(vj)
    if dominance.more_important(r, ri, rj) and r.rank_of(vi) <= r.rank_of(vj):
        return "accusers dominate but the node is not ranked strictly lower"
    return None


def _violates_bm(g: ReputationGraph, r: Ranking, vi: str, vj: str) -> str | None:
    if r.rank_of(vi) <= r.rank_of(vj):
        return None
    ri, rj = g.support_set(vi), g.support_set(vj)
    if dominance.more_important(r, ri, rj):
        return None
    if _exists_strict_pair(r, ri, rj):
        return None
    return (
        "ranked strictly lower without accuser dominance and no accuser "
        "outranks any accuser of the higher node"
    )


def _violates_tc(g: ReputationGraph, r: Ranking, vi: str, vj: str) -> str | None:
    if dominance.socially_stronger(r, g, vi, vj) and r.rank_of(vi) >= r.rank_of(vj):
        return "socially stronger but the node is not ranked strictly higher"
    return None


def _violates_mc(g: ReputationGraph, r: Ranking, vi: str, vj: str) -> str | None:
    if r.rank_of(vi) >= r.rank_of(vj):
        return None
    if dominance.socially_stronger(r, g, vi, vj):
        return None
    good_i = g.support_set(vi, Feedback.POSITIVE)
    good_j = g.support_set(vj, Feedback.POSITIVE)
    if _exists_strict_pair(r, good_i, good_j):
        return None
    bad_i = g.support_set(vi, Feedback.NEGATIVE)
    bad_j = g.support_set(vj, Feedback.NEGATIVE)
    if _exists_strict_pair(r, bad_j, bad_i):
        return None
    return (
        "ranked strictly higher without being socially stronger and with "
        "neither a supporter-side nor an accuser-side witness"
    )


PairCheck = Callable[[ReputationGraph, Ranking, str, str], "str | None"]

_PAIR_CHECKS: dict[Axiom, PairCheck] = {
    Axiom.T: _violates_t,
    Axiom.M: _violates_m,
    Axiom.VWM: _violates_vwm,
    Axiom.BT: _violates_bt,
    Axiom.BM: _violates_bm,
    Axiom.TC: _violates_tc,
    Axiom.MC: _violates_mc,
}


def pair_violates(
    graph: ReputationGraph, ranking: Ranking, axiom: Axiom, vi: str, vj: str
) -> str | None:
    """Reason the ordered pair (vi, vj) violates the axiom, or None."""
    return _PAIR_CHECKS[axiom](graph, ranking, vi, vj)


def _require_compatible(
    graph: ReputationGraph, ranking: Ranking, axiom: Axiom
) -> None:
    if axiom not in AXIOMS_BY_MODE[graph.mode]:
        raise ModeError(
            f"axiom {axiom.value} does not apply to {graph.mode.value} graphs"
        )
    if set(ranking.nodes) != set(graph.nodes):
        raise NodeSetMismatchError("ranking does not cover exactly the graph's nodes")


def check(graph: ReputationGraph, ranking: Ranking, axiom: Axiom) -> AxiomReport:
    """Evaluate one axiom over all ordered pairs of distinct nodes."""
    _require_compatible(graph, ranking, axiom)
    clause = _PAIR_CHECKS[axiom]
    for vi in graph.nodes:
        for vj in graph.nodes:
            if vi == vj:
                continue
            reason = clause(graph, ranking, vi, vj)
            if reason is not None:
                return AxiomReport(axiom, False, Witness(vi, vj, reason))
    return AxiomReport(axiom, True)


def check_all(graph: ReputationGraph, ranking: Ranking) -> list[AxiomReport]:
    """One report per axiom applicable to the graph's mode, in fixed order."""
    return [check(graph, ranking, axiom) for axiom in AXIOMS_BY_MODE[graph.mode]]
