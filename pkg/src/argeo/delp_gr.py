"""Grounded-semantics variant of the defeasible-derivation engine.

Instead of marking dialectical trees, collect every argument of the
program into one framework whose edges are the defeaters (proper or
blocking), and accept the grounded extension.  The attack notion is
pluggable so the same construction serves the cross-formalism checks.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .afsem import Framework, grounded
from .delp import (
    DelpArgument,
    defeater_kind,
    delp_arguments,
    disagree,
    subarguments_at,
)
from .lang import Literal, Program
from .orderings import Ordering, ordering_for

WitnessFn = Callable[[Program, DelpArgument, DelpArgument],
                     Iterable[tuple[Literal, DelpArgument]]]


def native_witnesses(program: Program, attacker: DelpArgument,
                     target: DelpArgument) -> tuple[tuple[Literal, DelpArgument], ...]:
    """Disagreement-based attack witnesses: (point, subargument) pairs."""
    out: list[tuple[Literal, DelpArgument]] = []
    for point in sorted(target.attack_points, key=lambda l: l.sort_key):
        if not disagree(program, attacker.conclusion, point):
            continue
        for sub in subarguments_at(program, target, point):
            out.append((point, sub))
    return tuple(out)


def delp_framework(program: Program, ordering: Ordering | None = None,
                   witnesses: WitnessFn = native_witnesses) -> Framework:
    """Framework over all arguments; an edge means proper-or-blocking defeat."""
    ordering = ordering or ordering_for(program)
    arguments = delp_arguments(program)
    defeats: set[tuple[DelpArgument, DelpArgument]] = set()
    for target in arguments:
        for attacker in arguments:
            for _, sub in witnesses(program, attacker, target):
                if defeater_kind(ordering, attacker, sub) is not None:
                    defeats.add((attacker, target))
                    break
    return Framework(arguments, frozenset(defeats))


def grounded_arguments(program: Program, ordering: Ordering | None = None,
                       witnesses: WitnessFn = native_witnesses) -> frozenset[DelpArgument]:
    return grounded(delp_framework(program, ordering, witnesses))


def warrant_gr(program: Program, goal: Literal,
               ordering: Ordering | None = None) -> bool:
    """Whether some argument for ``goal`` is in the grounded extension."""
    accepted = grounded_arguments(program, ordering)
    return any(a.conclusion == goal for a in accepted)


def warranted_literals_gr(program: Program,
                          ordering: Ordering | None = None) -> frozenset[Literal]:
    return frozenset(a.conclusion for a in grounded_arguments(program, ordering))
