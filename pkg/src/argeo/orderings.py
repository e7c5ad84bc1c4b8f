"""Argument-strength orderings.

Both engines compare arguments through the same interface: an argument is
summarised as a StrengthKey (the ids of all defeasible rules it uses, and
the ids of the last defeasible rules on its derivation paths), and an
Ordering turns two keys into a Relation.  Keeping the comparator keyed on
rule-id sets is what lets the two engines share one declared ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .errors import PriorityMissingError
from .lang import OrderingMode, Program


class Relation(Enum):
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"  # also covers equal strength


@dataclass(frozen=True)
class StrengthKey:
    """What an ordering is allowed to see of an argument."""

    defeasible_ids: frozenset[str]
    last_ids: frozenset[str]

    @property
    def is_strict(self) -> bool:
        return not self.defeasible_ids


class Ordering:
    """Base comparator; subclasses implement compare()."""

    def compare(self, a: StrengthKey, b: StrengthKey) -> Relation:
        raise NotImplementedError

    def strictly_weaker(self, a: StrengthKey, b: StrengthKey) -> bool:
        """True when a is strictly weaker than b."""
        return self.compare(a, b) is Relation.LESS


class ExplicitOrdering(Ordering):
    """Only declared pairs compare; everything else is incomparable.

    ``preferences`` holds (stronger, weaker) pairs of defeasible-rule-id
    sets.  No transitive closure is taken: a declaration relates exactly
    the two rule sets it names.
    """

    def __init__(self, preferences: frozenset[tuple[frozenset[str], frozenset[str]]]):
        self.preferences = frozenset(preferences)

    def compare(self, a: StrengthKey, b: StrengthKey) -> Relation:
        if (b.defeasible_ids, a.defeasible_ids) in self.preferences:
            return Relation.LESS
        if (a.defeasible_ids, b.defeasible_ids) in self.preferences:
            return Relation.GREATER
        return Relation.INCOMPARABLE


class SimpleOrdering(Ordering):
    """Strict arguments beat defeasible ones; nothing else compares."""

    def compare(self, a: StrengthKey, b: StrengthKey) -> Relation:
        if not a.is_strict and b.is_strict:
            return Relation.LESS
        if a.is_strict and not b.is_strict:
            return Relation.GREATER
        return Relation.INCOMPARABLE


class LastLinkOrdering(Ordering):
    """Compare by the weakest (minimum-rank) last defeasible rule.

    Ranks come from declared integer priorities, higher meaning stronger.
    Arguments with no defeasible rules outrank all others.  A last rule
    without a declared priority raises PriorityMissingError.
    """

    def __init__(self, priorities: Mapping[str, int]):
        self.priorities = dict(priorities)

    def _rank(self, key: StrengthKey) -> int:
        ranks = []
        for rule_id in key.last_ids:
            if rule_id not in self.priorities:
                raise PriorityMissingError(f"priority missing for rule: {rule_id}")
            ranks.append(self.priorities[rule_id])
        return min(ranks)

    def compare(self, a: StrengthKey, b: StrengthKey) -> Relation:
        if a.is_strict and b.is_strict:
            return Relation.INCOMPARABLE
        if b.is_strict:
            return Relation.LESS
        if a.is_strict:
            return Relation.GREATER
        a_rank, b_rank = self._rank(a), self._rank(b)
        if a_rank < b_rank:
            return Relation.LESS
        if a_rank > b_rank:
            return Relation.GREATER
        return Relation.INCOMPARABLE


def ordering_for(program: Program) -> Ordering:
    """The ordering a program declares (explicit when unspecified)."""
    if program.ordering_mode is OrderingMode.SIMPLE:
        return SimpleOrdering()
    if program.ordering_mode is OrderingMode.LASTLINK:
        return LastLinkOrdering(program.priority_map)
    return ExplicitOrdering(program.preferences)
