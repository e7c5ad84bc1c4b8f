"""Mappings and equivalence checks between the two engines.

A program is *simplified* when (a) every constructed tree argument uses a
minimal defeasible-rule set for its conclusion and (b) the strict closure
of each argument's subconclusions plus the facts is consistent.  On
simplified programs the two engines' arguments correspond: a derivation
argument maps to the non-empty set of tree arguments with the same
conclusion and the same defeasible rules, and acceptance under grounded
semantics coincides attack-for-attack for three pairings:

  tree rebut          <->  derivation-side rebut on defeasibly-derived heads
  tree urebut         <->  derivation-side rebut anywhere defeasible
  tree dlprebut       <->  native disagreement defeat

``verify_equivalence`` recomputes both sides and reports, per derivation
argument, whether grounded acceptance agrees with warrant.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .afsem import grounded
from .aspic import AspicArgument, AttackKind, build_framework, construct_arguments
from .delp import DelpArgument, delp_arguments, make_argument, subarguments_at
from .delp_gr import delp_framework, native_witnesses
from .errors import EngineError, NotSimplifiedError
from .lang import Literal, Program, strict_closure, is_directly_consistent
from .orderings import Ordering, ordering_for


# ======================================================================
# Simplified theories
# ======================================================================

@dataclass(frozen=True)
class SimplifiedViolation:
    kind: str  # "non-minimal" or "inconsistent-reach"
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@lru_cache(maxsize=None)
def _simplified_state(program: Program) -> tuple[bool, tuple[SimplifiedViolation, ...]]:
    arguments = construct_arguments(program)
    violations: list[SimplifiedViolation] = []
    by_conclusion: dict[Literal, list[AspicArgument]] = {}
    for argument in arguments:
        by_conclusion.setdefault(argument.conclusion, []).append(argument)
    for argument in arguments:
        mine = argument.strength_key.defeasible_ids
        for other in by_conclusion[argument.conclusion]:
            theirs = other.strength_key.defeasible_ids
            if theirs < mine:
                violations.append(SimplifiedViolation(
                    "non-minimal",
                    f"{argument.text} uses {sorted(mine)} but {other.text} "
                    f"reaches {argument.conclusion} with {sorted(theirs)}",
                ))
                break
        closure = strict_closure(argument.sub_conclusions | program.facts,
                                 program.strict_rules)
        if not is_directly_consistent(closure):
            violations.append(SimplifiedViolation(
                "inconsistent-reach",
                f"strict closure of {argument.text}'s subconclusions "
                f"plus the facts is contradictory",
            ))
    return (not violations, tuple(violations))


def is_simplified(program: Program) -> tuple[bool, tuple[SimplifiedViolation, ...]]:
    return _simplified_state(program)


def _require_simplified(program: Program) -> None:
    ok, violations = _simplified_state(program)
    if not ok:
        raise NotSimplifiedError(f"theory not simplified: {violations[0]}")


# ======================================================================
# Argument mappings
# ======================================================================

def aspic_to_delp(program: Program, argument: AspicArgument) -> DelpArgument:
    """The derivation argument with the same conclusion and defeasible rules."""
    _require_simplified(program)
    return make_argument(program, argument.defeasible_rules, argument.conclusion)


def delp_to_aspic(program: Program, argument: DelpArgument) -> tuple[AspicArgument, ...]:
    """All tree arguments with the same conclusion and defeasible rules."""
    _require_simplified(program)
    images = tuple(
        a for a in construct_arguments(program)
        if a.conclusion == argument.conclusion
        and a.strength_key.defeasible_ids == argument.rule_ids
    )
    if not images:
        raise EngineError(f"no tree argument realises {argument}")
    return images


# ======================================================================
# Derivation-side rebuts
# ======================================================================

def a_rebut_witnesses(program: Program, attacker: DelpArgument,
                      target: DelpArgument) -> tuple[tuple[Literal, DelpArgument], ...]:
    """(point, subargument) pairs where the attacker concludes the exact
    complement of a point the target derives with a defeasible final rule."""
    out: list[tuple[Literal, DelpArgument]] = []
    wanted = attacker.conclusion.complement()
    for point in sorted(target.heads, key=lambda l: l.sort_key):
        if point != wanted:
            continue
        for sub in subarguments_at(program, target, point):
            if point in sub.heads:  # final step of the subargument is defeasible
                out.append((point, sub))
    return tuple(out)


def ua_rebut_witnesses(program: Program, attacker: DelpArgument,
                       target: DelpArgument) -> tuple[tuple[Literal, DelpArgument], ...]:
    """(point, subargument) pairs where the attacker concludes the exact
    complement of a point whose subargument uses any defeasible rule."""
    out: list[tuple[Literal, DelpArgument]] = []
    wanted = attacker.conclusion.complement()
    for point in sorted(target.attack_points, key=lambda l: l.sort_key):
        if point != wanted:
            continue
        for sub in subarguments_at(program, target, point):
            if sub.rules:
                out.append((point, sub))
    return tuple(out)


# ======================================================================
# Equivalence verification
# ======================================================================

class Pairing(Enum):
    REBUT = "rebut"
    UREBUT = "urebut"
    DLPREBUT = "dlprebut"


_DERIVATION_SIDE = {
    Pairing.REBUT: a_rebut_witnesses,
    Pairing.UREBUT: ua_rebut_witnesses,
    Pairing.DLPREBUT: native_witnesses,
}


@dataclass(frozen=True)
class ReportRow:
    argument: DelpArgument
    warranted: bool
    justified: bool
    agree: bool

    def line(self) -> str:
        ids = ",".join(sorted(self.argument.rule_ids))
        return (
            f"ARG {{{ids}}} {self.argument.conclusion}"
            f" warrant={'U' if self.warranted else 'D'}"
            f" justified={'Y' if self.justified else 'N'}"
            f" agree={'Y' if self.agree else 'N'}"
        )


@dataclass(frozen=True)
class EquivalenceReport:
    pairing: Pairing
    simplified: bool
    violations: tuple[SimplifiedViolation, ...]
    rows: tuple[ReportRow, ...]

    @property
    def all_agree(self) -> bool:
        return self.simplified and all(row.agree for row in self.rows)

    def lines(self) -> list[str]:
        out = [f"pairing {self.pairing.value}"]
        if not self.simplified:
            out.append("NOT SIMPLIFIED")
            out.extend(f"  {v}" for v in self.violations)
            return out
        out.extend(row.line() for row in self.rows)
        out.append("RESULT " + ("agree" if self.all_agree else "DISAGREE"))
        return out


def verify_equivalence(program: Program, pairing: Pairing,
                       ordering: Ordering | None = None) -> EquivalenceReport:
    """Per-argument comparison of warrant (grounded derivation framework)
    against grounded justification of every tree image."""
    ok, violations = is_simplified(program)
    if not ok:
        return EquivalenceReport(pairing, False, violations, ())
    ordering = ordering or ordering_for(program)

    derivation_fw = delp_framework(program, ordering, _DERIVATION_SIDE[pairing])
    warranted = grounded(derivation_fw)
    tree_fw = build_framework(program, AttackKind(pairing.value), ordering)
    accepted = grounded(tree_fw)

    rows: list[ReportRow] = []
    for argument in delp_arguments(program):
        images = delp_to_aspic(program, argument)
        statuses = {image in accepted for image in images}
        is_warranted = argument in warranted
        justified = statuses == {True}
        agree = statuses == {is_warranted}
        rows.append(ReportRow(argument, is_warranted, justified, agree))
    return EquivalenceReport(pairing, True, violations, tuple(rows))
