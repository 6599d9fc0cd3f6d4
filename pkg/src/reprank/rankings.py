"""Social rankings as total preorders.

A ranking assigns every agent a dense positive rank; rank 1 is the most
important level and agents sharing a rank are tied. Total preorders over a
node set are enumerated as ordered set partitions.
"""

from __future__ import annotations

import enum
import itertools
from typing import Iterable, Iterator, Mapping

from .errors import (
    EnumerationCapError,
    NodeSetMismatchError,
    ParseError,
    UnknownNodeError,
)

DEFAULT_ENUMERATION_CAP = 8


class Comparison(enum.Enum):
    """How one agent stands relative to another in a ranking."""

    HIGHER = "higher"
    EQUAL = "equal"
    LOWER = "lower"


class Ranking:
    """Immutable total preorder over a node set, stored as dense ranks.

    The used rank values are exactly 1..k for some k, and a smaller rank
    means a more important agent.
    """

    __slots__ = ("_ranks", "_levels")

    def __init__(self, ranks: Mapping[str, int]):
        if not ranks:
            raise ValueError("a ranking needs at least one node")
        for node, rank in ranks.items():
            if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
                raise ValueError(f"rank of {node!r} must be a positive integer")
        used = set(ranks.values())
        if used != set(range(1, len(used) + 1)):
            raise ValueError("ranks must be dense: exactly the values 1..k")
        object.__setattr__(self, "_ranks", dict(ranks))
        grouped: list[list[str]] = [[] for _ in range(len(used))]
        for node, rank in ranks.items():
            grouped[rank - 1].append(node)
        object.__setattr__(
            self, "_levels", tuple(tuple(sorted(level)) for level in grouped)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Ranking is immutable")

    @classmethod
    def from_levels(cls, levels: Iterable[Iterable[str]]) -> "Ranking":
        """Build a ranking from importance levels, most important first."""
        ranks: dict[str, int] = {}
        for rank, level in enumerate(levels, start=1):
            members = list(level)
            if not members:
                raise ValueError("levels must be non-empty")
            for node in members:
                if node in ranks:
                    raise ValueError(f"node {node!r} appears in two levels")
                ranks[node] = rank
        return cls(ranks)

    @property
    def nodes(self) -> tuple[str, ...]:
        return tuple(sorted(self._ranks))

    @property
    def levels(self) -> tuple[tuple[str, ...], ...]:
        """Importance levels, most important first, each lex-sorted."""
        return self._levels

    @property
    def num_levels(self) -> int:
        return len(self._levels)

    def rank_of(self, node: str) -> int:
        try:
            return self._ranks[node]
        except KeyError:
            raise UnknownNodeError(f"unknown node: {node!r}") from None

    def as_dict(self) -> dict[str, int]:
        return dict(self._ranks)

    def __contains__(self, node: str) -> bool:
        return node in self._ranks

    def __len__(self) -> int:
        return len(self._ranks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ranking):
            return NotImplemented
        return self._ranks == other._ranks

    def __hash__(self) -> int:
        return hash(frozenset(self._ranks.items()))

    def __repr__(self) -> str:
        body = " > ".join("=".join(level) for level in self._levels)
        return f"Ranking({body})"

    def serialize(self) -> str:
        """One ``NAME RANK`` line per node, in lexicographic node order."""
        return "".join(f"{node} {self._ranks[node]}\n" for node in self.nodes)


def compare(ranking: Ranking, u: str, v: str) -> Comparison:
    """Standing of u relative to v: smaller rank means Higher."""
    ru, rv = ranking.rank_of(u), ranking.rank_of(v)
    if ru < rv:
        return Comparison.HIGHER
    if ru > rv:
        return Comparison.LOWER
    return Comparison.EQUAL


def normalize(raw: Mapping[str, int]) -> Ranking:
    """Compress arbitrary integer scores onto dense ranks, order preserved."""
    distinct = sorted(set(raw.values()))
    dense = {score: position for position, score in enumerate(distinct, start=1)}
    return Ranking({node: dense[score] for node, score in raw.items()})


def is_refinement(later: Ranking, earlier: Ranking) -> bool:
    """True iff every strict preference of ``earlier`` survives in ``later``.

    Ties of ``earlier`` may break either way; a reversed strict pair or a
    newly merged strict pair disqualifies.
    """
    if set(later.nodes) != set(earlier.nodes):
        raise NodeSetMismatchError("rankings cover different node sets")
    # Strict separation must hold between consecutive earlier levels; it then
    # chains to all level pairs.
    for upper, lower in itertools.pairwise(earlier.levels):
        if max(later.rank_of(n) for n in upper) >= min(
            later.rank_of(n) for n in lower
        ):
            return False
    return True


def enumerate_preorders(
    nodes: Iterable[str], cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[Ranking]:
    """Yield every total preorder over ``nodes`` exactly once.

    Rankings come out as ordered set partitions built block-by-block in
    lexicographic node order, so the stream is deterministic. Node sets
    larger than ``cap`` are refused up front.
    """
    ordered = tuple(sorted(set(nodes)))
    if not ordered:
        raise ValueError("cannot enumerate preorders over an empty node set")
    if len(ordered) > cap:
        raise EnumerationCapError(
            f"{len(ordered)} nodes exceeds the enumeration cap of {cap}"
        )
    for levels in _ordered_partitions(ordered):
        yield Ranking.from_levels(levels)


def _ordered_partitions(
    pool: tuple[str, ...]
) -> Iterator[tuple[tuple[str, ...], ...]]:
    if not pool:
        yield ()
        return
    for size in range(1, len(pool) + 1):
        for block in itertools.combinations(pool, size):
            chosen = set(block)
            rest = tuple(n for n in pool if n not in chosen)
            for suffix in _ordered_partitions(rest):
                yield (block,) + suffix


def parse_ranking(text: str) -> Ranking:
    """Parse ``NAME RANK`` lines into a Ranking.

    Blank lines and ``#`` comments are ignored; each node may appear once
    and the ranks must be dense positive integers.
    """
    ranks: dict[str, int] = {}
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError("expected 'NAME RANK'", line_no)
        name, rank_text = tokens
        if name in ranks:
            raise ParseError(f"node {name!r} ranked twice", line_no)
        try:
            rank = int(rank_text)
        except ValueError:
            raise ParseError(f"rank {rank_text!r} is not an integer", line_no) from None
        if rank < 1:
            raise ParseError(f"rank must be positive, got {rank}", line_no)
        ranks[name] = rank
    if not ranks:
        raise ParseError("ranking text contains no entries")
    try:
        return Ranking(ranks)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
