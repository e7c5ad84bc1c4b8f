"""Tree-structured argument construction and attack analysis.

Arguments are inference trees: a premise argument introduces one fact, an
inference argument applies a rule to subarguments concluding its body.
Construction is path-acyclic (no conclusion may reappear anywhere below
the node that introduces it), which keeps the argument set finite without
losing any conclusion.  Three attack relations of increasing permissiveness
are provided, each returning the subargument witnesses the attack lands on;
defeat then discounts attacks whose attacker is strictly weaker than the
witness under the program's ordering.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import product

from .afsem import Framework
from .errors import BudgetExceededError
from .lang import Literal, Program, Rule, is_indirectly_consistent
from .orderings import Ordering, Relation, StrengthKey, ordering_for

DEFAULT_BUDGET = 100_000
BUDGET_ENV_VAR = "ARGEO_ARG_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    raw = os.environ.get(BUDGET_ENV_VAR)
    return int(raw) if raw else DEFAULT_BUDGET


# ======================================================================
# Arguments
# ======================================================================

@dataclass(frozen=True)
class AspicArgument:
    """A premise argument (``premise`` set) or an inference argument
    (``rule`` set, one direct subargument per body literal, in order)."""

    premise: Literal | None
    rule: Rule | None
    direct_subarguments: tuple["AspicArgument", ...]

    @cached_property
    def conclusion(self) -> Literal:
        return self.premise if self.rule is None else self.rule.head

    @cached_property
    def premises(self) -> frozenset[Literal]:
        if self.rule is None:
            return frozenset({self.premise})
        return frozenset().union(*(s.premises for s in self.direct_subarguments)) \
            if self.direct_subarguments else frozenset()

    @cached_property
    def subarguments(self) -> frozenset["AspicArgument"]:
        """All subarguments, including this argument itself."""
        out = {self}
        for sub in self.direct_subarguments:
            out |= sub.subarguments
        return frozenset(out)

    @cached_property
    def sub_conclusions(self) -> frozenset[Literal]:
        return frozenset(s.conclusion for s in self.subarguments)

    @cached_property
    def rules(self) -> frozenset[Rule]:
        out: set[Rule] = set() if self.rule is None else {self.rule}
        for sub in self.direct_subarguments:
            out |= sub.rules
        return frozenset(out)

    @cached_property
    def defeasible_rules(self) -> frozenset[Rule]:
        return frozenset(r for r in self.rules if r.is_defeasible)

    @property
    def top_rule(self) -> Rule | None:
        return self.rule

    @property
    def is_strict(self) -> bool:
        """No defeasible rule anywhere in the tree."""
        return not self.defeasible_rules

    @cached_property
    def last_defeasible_rules(self) -> frozenset[Rule]:
        """The final defeasible rules on each branch: the top rule if it is
        defeasible, otherwise the union over direct subarguments."""
        if self.rule is not None and self.rule.is_defeasible:
            return frozenset({self.rule})
        out: set[Rule] = set()
        for sub in self.direct_subarguments:
            out |= sub.last_defeasible_rules
        return frozenset(out)

    @cached_property
    def strength_key(self) -> StrengthKey:
        return StrengthKey(
            frozenset(r.id for r in self.defeasible_rules),
            frozenset(r.id for r in self.last_defeasible_rules),
        )

    @cached_property
    def text(self) -> str:
        if self.rule is None:
            return str(self.premise)
        arrow = "->" if self.rule.is_strict else "=>"
        inner = ", ".join(s.text for s in self.direct_subarguments)
        return f"[{inner} {arrow} {self.conclusion}]" if inner \
            else f"[{arrow} {self.conclusion}]"

    @property
    def sort_key(self) -> tuple[int, str]:
        return (len(self.rules), self.text)

    def __str__(self) -> str:
        return self.text


def premise_argument(literal: Literal) -> AspicArgument:
    return AspicArgument(literal, None, ())


def inference_argument(rule: Rule, subarguments: tuple[AspicArgument, ...]) -> AspicArgument:
    if len(subarguments) != len(rule.body):
        raise ValueError(f"rule {rule.id} needs {len(rule.body)} subarguments")
    for literal, sub in zip(rule.body, subarguments):
        if sub.conclusion != literal:
            raise ValueError(f"subargument concludes {sub.conclusion}, rule needs {literal}")
    return AspicArgument(None, rule, tuple(subarguments))


def construct_arguments(program: Program, budget: int | None = None) -> tuple[AspicArgument, ...]:
    """All path-acyclic arguments of the program, deterministically ordered.

    Raises BudgetExceededError once more than ``budget`` arguments exist
    (default from ARGEO_ARG_BUDGET or 100000).
    """
    return _construct_cached(program, resolve_budget(budget))


@lru_cache(maxsize=None)
def _construct_cached(program: Program, limit: int) -> tuple[AspicArgument, ...]:
    known: set[AspicArgument] = {premise_argument(f) for f in program.facts}
    by_conclusion: dict[Literal, list[AspicArgument]] = {}
    for arg in known:
        by_conclusion.setdefault(arg.conclusion, []).append(arg)

    changed = True
    while changed:
        changed = False
        for rule in program.rules:
            pools = [by_conclusion.get(b, []) for b in rule.body]
            if any(not pool for pool in pools):
                continue
            for combo in product(*pools):
                if any(rule.head in sub.sub_conclusions for sub in combo):
                    continue
                candidate = AspicArgument(None, rule, tuple(combo))
                if candidate in known:
                    continue
                known.add(candidate)
                by_conclusion.setdefault(candidate.conclusion, []).append(candidate)
                if len(known) > limit:
                    raise BudgetExceededError(
                        f"argument budget exceeded: more than {limit} arguments"
                    )
                changed = True
    return tuple(sorted(known, key=lambda a: a.sort_key))


# ======================================================================
# Attacks and defeats
# ======================================================================

class AttackKind(Enum):
    REBUT = "rebut"
    UREBUT = "urebut"
    DLPREBUT = "dlprebut"


@dataclass(frozen=True)
class Attack:
    attacker: AspicArgument
    target: AspicArgument
    witness: AspicArgument  # the subargument of target the attack lands on
    kind: AttackKind


def rebut_witnesses(attacker: AspicArgument,
                    target: AspicArgument) -> tuple[AspicArgument, ...]:
    """Subarguments whose defeasible top rule concludes the complement."""
    wanted = attacker.conclusion.complement()
    hits = [
        sub for sub in target.subarguments
        if sub.rule is not None and sub.rule.is_defeasible and sub.conclusion == wanted
    ]
    return tuple(sorted(hits, key=lambda a: a.sort_key))


def urebut_witnesses(attacker: AspicArgument,
                     target: AspicArgument) -> tuple[AspicArgument, ...]:
    """Subarguments using any defeasible rule that conclude the complement."""
    wanted = attacker.conclusion.complement()
    hits = [
        sub for sub in target.subarguments
        if sub.defeasible_rules and sub.conclusion == wanted
    ]
    return tuple(sorted(hits, key=lambda a: a.sort_key))


def dlprebut_witnesses(program: Program, attacker: AspicArgument,
                       target: AspicArgument) -> tuple[AspicArgument, ...]:
    """Subarguments whose conclusion is jointly (strictly) inconsistent with
    the attacker's conclusion and the facts."""
    hits = [
        sub for sub in target.subarguments
        if not is_indirectly_consistent(
            {attacker.conclusion, sub.conclusion} | program.facts,
            program.strict_rules,
        )
    ]
    return tuple(sorted(hits, key=lambda a: a.sort_key))


def attack_witnesses(program: Program, kind: AttackKind, attacker: AspicArgument,
                     target: AspicArgument) -> tuple[AspicArgument, ...]:
    if kind is AttackKind.REBUT:
        return rebut_witnesses(attacker, target)
    if kind is AttackKind.UREBUT:
        return urebut_witnesses(attacker, target)
    return dlprebut_witnesses(program, attacker, target)


def compute_attacks(program: Program, arguments: tuple[AspicArgument, ...],
                    kind: AttackKind) -> tuple[Attack, ...]:
    out: list[Attack] = []
    for attacker in arguments:
        for target in arguments:
            for witness in attack_witnesses(program, kind, attacker, target):
                out.append(Attack(attacker, target, witness, kind))
    return tuple(out)


@dataclass
class StructuredFramework:
    """Arguments, attacks with witnesses, and the ordering that turns
    attacks into defeats."""

    program: Program
    kind: AttackKind
    arguments: tuple[AspicArgument, ...]
    attacks: tuple[Attack, ...]
    ordering: Ordering

    def attack_defeats(self, attack: Attack) -> bool:
        """An attack defeats unless the attacker is strictly weaker than
        the witness it lands on."""
        return self.ordering.compare(
            attack.attacker.strength_key, attack.witness.strength_key
        ) is not Relation.LESS

    @cached_property
    def defeat_pairs(self) -> frozenset[tuple[AspicArgument, AspicArgument]]:
        return frozenset(
            (a.attacker, a.target) for a in self.attacks if self.attack_defeats(a)
        )

    def to_framework(self) -> Framework:
        return Framework(self.arguments, self.defeat_pairs)


def build_structured(program: Program, kind: AttackKind,
                     ordering: Ordering | None = None,
                     budget: int | None = None) -> StructuredFramework:
    arguments = construct_arguments(program, budget)
    attacks = compute_attacks(program, arguments, kind)
    return StructuredFramework(
        program, kind, arguments, attacks, ordering or ordering_for(program)
    )


def build_framework(program: Program, kind: AttackKind,
                    ordering: Ordering | None = None,
                    budget: int | None = None) -> Framework:
    return build_structured(program, kind, ordering, budget).to_framework()
