"""Ranking engines: iterative refinement of a coarse initial preorder.

All three engines share one loop. Start from an initial ranking, then
repeatedly find two tied agents where one's backers dominate the other's
under the *current* ranking, and split their level. Each split strictly
increases the number of levels, so at most |V| - 1 iterations run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal

from . import dominance
from .errors import ModeError
from .graphs import Feedback, Mode, ReputationGraph
from .rankings import Ranking, normalize

StrongerFn = Callable[[Ranking, str, str], bool]
SameFn = Callable[[Ranking, str, str], bool]


@dataclass(frozen=True)
class TraceStep:
    """One refinement iteration: who moved, which way, and the result."""

    index: int
    chosen: str
    witness: str
    moved: tuple[str, ...]
    left_behind: tuple[str, ...]
    direction: Literal["above", "below"]
    ranking: Ranking


@dataclass(frozen=True)
class RefinementTrace:
    """Initial ranking plus every split the engine performed, in order."""

    initial: Ranking
    steps: tuple[TraceStep, ...]

    @property
    def iterations(self) -> int:
        return len(self.steps)

    def rankings(self) -> tuple[Ranking, ...]:
        """The full chain: initial ranking, then one snapshot per step."""
        return (self.initial,) + tuple(step.ranking for step in self.steps)


def _pick_split(
    ranking: Ranking, stronger: StrongerFn
) -> tuple[str, str] | None:
    """Lex-smallest eligible agent and its lex-smallest dominated levelmate.

    An agent is eligible when it dominates some levelmate and no levelmate
    dominates it back; domination is transitive, so whenever any same-level
    pair violates, an eligible agent exists.
    """
    for vi in sorted(ranking.nodes):
        mates = [n for n in ranking.levels[ranking.rank_of(vi) - 1] if n != vi]
        witnesses = [vj for vj in mates if stronger(ranking, vi, vj)]
        if not witnesses:
            continue
        if any(stronger(ranking, vs, vi) for vs in mates):
            continue
        return vi, min(witnesses)
    return None


def _refine(
    initial: Ranking,
    stronger: StrongerFn,
    same: SameFn,
    direction: Literal["above", "below"],
) -> tuple[Ranking, RefinementTrace]:
    current = initial
    steps: list[TraceStep] = []
    while True:
        picked = _pick_split(current, stronger)
        if picked is None:
            break
        if len(steps) >= len(current) - 1:
            raise RuntimeError("refinement exceeded the |V| - 1 iteration bound")
        chosen, witness = picked
        level = current.levels[current.rank_of(chosen) - 1]
        moved = tuple(
            n for n in level if n == chosen or same(current, chosen, n)
        )
        left_behind = tuple(n for n in level if n not in set(moved))
        split = (
            (moved, left_behind) if direction == "above" else (left_behind, moved)
        )
        new_levels: list[tuple[str, ...]] = []
        for lvl in current.levels:
            if chosen in lvl:
                new_levels.extend(split)
            else:
                new_levels.append(lvl)
        current = Ranking.from_levels(new_levels)
        steps.append(
            TraceStep(
                index=len(steps) + 1,
                chosen=chosen,
                witness=witness,
                moved=moved,
                left_behind=left_behind,
                direction=direction,
                ranking=current,
            )
        )
    return current, RefinementTrace(initial=initial, steps=tuple(steps))


def rank_positive(graph: ReputationGraph) -> tuple[Ranking, RefinementTrace]:
    """Rank a positive-feedback graph; more supporters start higher.

    Splits promote an agent whose supporter set strictly dominates a tied
    agent's; the output always satisfies the transitivity axiom.
    """
    if graph.mode is not Mode.POSITIVE_ONLY:
        raise ModeError("rank_positive needs a positive-only graph")
    supporters = {v: graph.support_set(v, Feedback.POSITIVE) for v in graph.nodes}
    initial = normalize({v: -len(supporters[v]) for v in graph.nodes})

    def stronger(r: Ranking, u: str, v: str) -> bool:
        return dominance.more_important(r, supporters[u], supporters[v])

    def same(r: Ranking, u: str, v: str) -> bool:
        return dominance.equally_strong(r, supporters[u], supporters[v])

    return _refine(initial, stronger, same, "above")


def rank_negative(graph: ReputationGraph) -> tuple[Ranking, RefinementTrace]:
    """Rank a negative-feedback graph; fewer accusers start higher.

    Mirrors the positive engine: an agent whose accuser set strictly
    dominates (is more reliable than) a tied agent's gets pushed below its
    level. The output always satisfies the accusation-transitivity axiom.
    """
    if graph.mode is not Mode.NEGATIVE_ONLY:
        raise ModeError("rank_negative needs a negative-only graph")
    accusers = {v: graph.support_set(v, Feedback.NEGATIVE) for v in graph.nodes}
    initial = normalize({v: len(accusers[v]) for v in graph.nodes})

    def stronger(r: Ranking, u: str, v: str) -> bool:
        return dominance.more_important(r, accusers[u], accusers[v])

    def same(r: Ranking, u: str, v: str) -> bool:
        return dominance.equally_strong(r, accusers[u], accusers[v])

    return _refine(initial, stronger, same, "below")


def rank_combined(graph: ReputationGraph) -> tuple[Ranking, RefinementTrace]:
    """Rank a mixed-feedback graph via the socially-stronger relation.

    Starts all-equal; an agent socially stronger than a tied one moves
    above, carrying along levelmates whose supporter and accuser sets both
    match its own exactly.
    """
    if graph.mode is not Mode.COMBINED:
        raise ModeError("rank_combined needs a combined-mode graph")
    good = {v: graph.support_set(v, Feedback.POSITIVE) for v in graph.nodes}
    bad = {v: graph.support_set(v, Feedback.NEGATIVE) for v in graph.nodes}
    initial = Ranking({v: 1 for v in graph.nodes})

    def stronger(r: Ranking, u: str, v: str) -> bool:
        return dominance.socially_stronger(r, graph, u, v)

    def same(r: Ranking, u: str, v: str) -> bool:
        return dominance.equally_strong(r, good[u], good[v]) and dominance.equally_strong(
            r, bad[u], bad[v]
        )

    return _refine(initial, stronger, same, "above")


_ENGINES = {
    Mode.POSITIVE_ONLY: rank_positive,
    Mode.NEGATIVE_ONLY: rank_negative,
    Mode.COMBINED: rank_combined,
}


def rank_graph(graph: ReputationGraph) -> tuple[Ranking, RefinementTrace]:
    """Dispatch to the engine matching the graph's mode."""
    return _ENGINES[graph.mode](graph)
