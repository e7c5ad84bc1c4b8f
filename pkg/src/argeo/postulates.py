"""Rationality audits over accepted conclusions.

Given the set of conclusions an engine accepts, three checks apply:
direct consistency (no complementary pair among the conclusions), indirect
consistency (no complementary pair in their strict closure), and strict
closure (everything the strict rules derive from the conclusions is itself
accepted).  Audits report witnesses; engines never filter their output to
force a check to pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .afsem import Semantics, extensions, grounded
from .aspic import AttackKind, build_framework
from .delp import warranted_literals
from .delp_gr import warranted_literals_gr
from .lang import Literal, Program, complementary_pairs, strict_closure
from .orderings import Ordering, ordering_for


@dataclass(frozen=True)
class AuditResult:
    direct_ok: bool
    direct_witness: tuple[Literal, Literal] | None
    indirect_ok: bool
    indirect_witness: tuple[Literal, Literal] | None
    closed_ok: bool
    closure_witness: Literal | None

    @property
    def all_ok(self) -> bool:
        return self.direct_ok and self.indirect_ok and self.closed_ok

    def summary(self) -> str:
        def flag(ok: bool, witness) -> str:
            if ok:
                return "PASS"
            if isinstance(witness, tuple):
                return f"FAIL({witness[0]}/{witness[1]})"
            return f"FAIL({witness})"

        return (
            f"direct={flag(self.direct_ok, self.direct_witness)}"
            f" indirect={flag(self.indirect_ok, self.indirect_witness)}"
            f" closure={flag(self.closed_ok, self.closure_witness)}"
        )


def audit_conclusions(program: Program, conclusions: Iterable[Literal]) -> AuditResult:
    accepted = frozenset(conclusions)
    direct = complementary_pairs(accepted)
    closure = strict_closure(accepted, program.strict_rules)
    indirect = complementary_pairs(closure)
    missing = sorted(closure - accepted, key=lambda l: l.sort_key)
    return AuditResult(
        direct_ok=not direct,
        direct_witness=direct[0] if direct else None,
        indirect_ok=not indirect,
        indirect_witness=indirect[0] if indirect else None,
        closed_ok=not missing,
        closure_witness=missing[0] if missing else None,
    )


@dataclass(frozen=True)
class ExtensionAudit:
    index: int
    conclusions: frozenset[Literal]
    result: AuditResult


def audit_delp(program: Program,
               ordering: Ordering | None = None) -> tuple[frozenset[Literal], AuditResult]:
    conclusions = warranted_literals(program, ordering)
    return conclusions, audit_conclusions(program, conclusions)


def audit_delp_gr(program: Program,
                  ordering: Ordering | None = None) -> tuple[frozenset[Literal], AuditResult]:
    conclusions = warranted_literals_gr(program, ordering)
    return conclusions, audit_conclusions(program, conclusions)


def audit_aspic(program: Program, kind: AttackKind,
                semantics: Semantics = Semantics.GROUNDED,
                ordering: Ordering | None = None,
                budget: int | None = None) -> tuple[ExtensionAudit, ...]:
    """One audit per extension, in deterministic extension order."""
    framework = build_framework(program, kind, ordering, budget)
    if semantics is Semantics.GROUNDED:
        pools = [grounded(framework)]
    else:
        pools = sorted(
            extensions(framework, semantics),
            key=lambda ext: tuple(sorted(a.text for a in ext)),
        )
    out = []
    for index, pool in enumerate(pools):
        conclusions = frozenset(a.conclusion for a in pool)
        out.append(ExtensionAudit(index, conclusions, audit_conclusions(program, conclusions)))
    return tuple(out)
