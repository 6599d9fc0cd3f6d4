"""Exhaustive certification of axiom satisfiability on small graphs.

For a graph and an axiom set, scan every total preorder over the nodes.
Either some ranking satisfies all requested axioms (SAT, with the first
such ranking as witness) or none does (UNSAT, backed by a complete scan).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .axioms import AXIOMS_BY_MODE, Axiom, check
from .errors import InputError, ModeError
from .graphs import Mode, ReputationGraph
from .rankings import DEFAULT_ENUMERATION_CAP, Ranking, enumerate_preorders


class CertificateStatus(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"


@dataclass(frozen=True)
class Certificate:
    """Verdict of an exhaustive scan over total preorders.

    SAT carries the first satisfying ranking in enumeration order and the
    number of preorders examined up to and including it; UNSAT's examined
    count equals the total number of preorders for the node count.
    """

    status: CertificateStatus
    witness: Ranking | None
    examined: int

    def render_text(self) -> str:
        if self.status is CertificateStatus.UNSAT:
            return f"UNSAT after {self.examined} preorders"
        return "SAT:\n" + self.witness.serialize().rstrip("\n")


def _validated_axioms(
    graph: ReputationGraph, axioms: Iterable[Axiom]
) -> tuple[Axiom, ...]:
    wanted = set(axioms)
    allowed = AXIOMS_BY_MODE[graph.mode]
    for axiom in wanted:
        if axiom not in allowed:
            raise ModeError(
                f"axiom {axiom.value} does not apply to {graph.mode.value} graphs"
            )
    # Fixed evaluation order keeps runs reproducible.
    return tuple(a for a in allowed if a in wanted)


def _satisfies(graph: ReputationGraph, ranking: Ranking, axioms: tuple[Axiom, ...]) -> bool:
    return all(check(graph, ranking, axiom).passed for axiom in axioms)


def certify(
    graph: ReputationGraph,
    axioms: Iterable[Axiom],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Certificate:
    """First satisfying preorder, or UNSAT after scanning all of them."""
    ordered_axioms = _validated_axioms(graph, axioms)
    examined = 0
    for ranking in enumerate_preorders(graph.nodes, cap=cap):
        examined += 1
        if _satisfies(graph, ranking, ordered_axioms):
            return Certificate(CertificateStatus.SAT, ranking, examined)
    return Certificate(CertificateStatus.UNSAT, None, examined)


def count_satisfying(
    graph: ReputationGraph,
    axioms: Iterable[Axiom],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> int:
    """How many total preorders satisfy the whole axiom set."""
    ordered_axioms = _validated_axioms(graph, axioms)
    return sum(
        1
        for ranking in enumerate_preorders(graph.nodes, cap=cap)
        if _satisfies(graph, ranking, ordered_axioms)
    )


def certify_vwm_strongly_connected(
    graph: ReputationGraph, cap: int = DEFAULT_ENUMERATION_CAP
) -> Certificate:
    """Certify {T, VWM} on a strongly connected positive graph.

    The strong-connectivity requirement is a precondition here, not an
    axiom: callers asking about this restricted family must supply a graph
    that belongs to it.
    """
    if graph.mode is not Mode.POSITIVE_ONLY:
        raise ModeError("expected a positive-only graph")
    if not graph.is_strongly_connected():
        raise InputError("graph is not strongly connected")
    return certify(graph, (Axiom.T, Axiom.VWM), cap=cap)
