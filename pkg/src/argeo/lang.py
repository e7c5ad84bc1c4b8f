"""Rule-language core: literals, strict/defeasible rules, programs.

A program is a set of ground facts plus strict rules (``head <- body``)
and defeasible rules (``head -< body``) over classically negated literals,
together with optional rule priorities, pairwise argument preferences, and
an ordering-mode declaration.  This module owns the concrete syntax, the
in-memory types, forward-chaining closure, consistency checks, and
transposition of strict rules.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable

from .errors import ParseError

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


# ======================================================================
# Literals and rules
# ======================================================================

@dataclass(frozen=True)
class Literal:
    """A propositional atom or its classical negation."""

    atom: str
    negated: bool = False

    def complement(self) -> "Literal":
        """The literal with opposite sign: ``p`` <-> ``~p``."""
        return Literal(self.atom, not self.negated)

    @property
    def sort_key(self) -> tuple[str, bool]:
        return (self.atom, self.negated)

    def __str__(self) -> str:
        return f"~{self.atom}" if self.negated else self.atom


class RuleKind(Enum):
    STRICT = "strict"
    DEFEASIBLE = "defeasible"

    @property
    def arrow(self) -> str:
        return "<-" if self is RuleKind.STRICT else "-<"


@dataclass(frozen=True)
class Rule:
    """A strict or defeasible rule.

    The body is an ordered tuple with duplicates removed; rule identity
    for duplicate detection is (kind, head, set-of-body), while ``id`` is
    the label used by priorities, preferences, and all reports.
    """

    id: str
    kind: RuleKind
    head: Literal
    body: tuple[Literal, ...]

    @property
    def is_strict(self) -> bool:
        return self.kind is RuleKind.STRICT

    @property
    def is_defeasible(self) -> bool:
        return self.kind is RuleKind.DEFEASIBLE

    @property
    def body_set(self) -> frozenset[Literal]:
        return frozenset(self.body)

    @property
    def signature(self) -> tuple[RuleKind, Literal, frozenset[Literal]]:
        return (self.kind, self.head, self.body_set)

    def __str__(self) -> str:
        body = ", ".join(str(b) for b in self.body)
        return f"[{self.id}] {self.head} {self.kind.arrow} {body}."


class OrderingMode(Enum):
    EXPLICIT = "explicit"
    SIMPLE = "simple"
    LASTLINK = "lastlink"


# ======================================================================
# Programs
# ======================================================================

@dataclass(frozen=True)
class Program:
    """An argumentation program: facts, rules, and ordering declarations.

    ``priorities`` maps rule ids to integer ranks (higher = stronger) and
    is kept as a sorted tuple of pairs so programs stay hashable.
    ``preferences`` holds explicit pairwise declarations: each pair
    (stronger, weaker) relates two sets of defeasible-rule ids.
    """

    facts: frozenset[Literal] = frozenset()
    strict_rules: tuple[Rule, ...] = ()
    defeasible_rules: tuple[Rule, ...] = ()
    priorities: tuple[tuple[str, int], ...] = ()
    preferences: frozenset[tuple[frozenset[str], frozenset[str]]] = frozenset()
    ordering_mode: OrderingMode = OrderingMode.EXPLICIT

    @cached_property
    def rules(self) -> tuple[Rule, ...]:
        return self.strict_rules + self.defeasible_rules

    @cached_property
    def rule_by_id(self) -> dict[str, Rule]:
        return {r.id: r for r in self.rules}

    @cached_property
    def priority_map(self) -> dict[str, int]:
        return dict(self.priorities)

    @cached_property
    def head_index(self) -> dict[Literal, tuple[Rule, ...]]:
        index: dict[Literal, list[Rule]] = {}
        for rule in self.rules:
            index.setdefault(rule.head, []).append(rule)
        return {head: tuple(rs) for head, rs in index.items()}

    @cached_property
    def literals(self) -> frozenset[Literal]:
        """Every literal mentioned by the program, closed under complement."""
        seen: set[Literal] = set(self.facts)
        for rule in self.rules:
            seen.add(rule.head)
            seen.update(rule.body)
        return frozenset(seen) | frozenset(l.complement() for l in seen)

    def rules_for_head(self, head: Literal) -> tuple[Rule, ...]:
        return self.head_index.get(head, ())


def make_program(
    facts: Iterable[Literal] = (),
    strict_rules: Iterable[Rule] = (),
    defeasible_rules: Iterable[Rule] = (),
    priorities: Iterable[tuple[str, int]] = (),
    preferences: Iterable[tuple[frozenset[str], frozenset[str]]] = (),
    ordering_mode: OrderingMode = OrderingMode.EXPLICIT,
) -> Program:
    """Build and validate a program from parts (normalising field order)."""
    program = Program(
        facts=frozenset(facts),
        strict_rules=tuple(strict_rules),
        defeasible_rules=tuple(defeasible_rules),
        priorities=tuple(sorted(priorities)),
        preferences=frozenset(preferences),
        ordering_mode=ordering_mode,
    )
    validate_program(program)
    return program


def validate_program(program: Program) -> None:
    """Check load-time invariants; raise ParseError on violation."""
    seen_ids: set[str] = set()
    seen_signatures: set[tuple] = set()
    for rule in program.rules:
        if rule.id in seen_ids:
            raise ParseError(f"duplicate rule label: {rule.id}")
        seen_ids.add(rule.id)
        if rule.signature in seen_signatures:
            raise ParseError(f"duplicate rule: {rule}")
        seen_signatures.add(rule.signature)
        if rule.is_strict and not rule.body:
            raise ParseError(f"strict rule requires a non-empty body: {rule.id}")
    for rule_id, _ in program.priorities:
        if rule_id not in program.rule_by_id:
            raise ParseError(f"priority for unknown rule: {rule_id}")
    defeasible_ids = {r.id for r in program.defeasible_rules}
    for stronger, weaker in program.preferences:
        for rule_id in stronger | weaker:
            if rule_id not in defeasible_ids:
                raise ParseError(f"preference over unknown defeasible rule: {rule_id}")
        if stronger == weaker:
            raise ParseError("preference relates a rule set to itself")
        if (weaker, stronger) in program.preferences:
            pair = sorted([sorted(stronger), sorted(weaker)])
            raise ParseError(f"conflicting preference declarations: {pair[0]} vs {pair[1]}")
    closure = strict_closure(program.facts, program.strict_rules)
    if not is_directly_consistent(closure):
        lit, _ = complementary_pairs(closure)[0]
        raise ParseError(f"contradictory strict part: derives both {lit} and {lit.complement()}")


# ======================================================================
# Closure and consistency
# ======================================================================

def forward_closure(literals: Iterable[Literal], rules: Iterable[Rule]) -> frozenset[Literal]:
    """All literals derivable from ``literals`` by forward-chaining ``rules``."""
    derived = set(literals)
    pending = [r for r in rules if r.body]
    # Empty-bodied (presumption-style) rules fire unconditionally.
    derived.update(r.head for r in rules if not r.body)
    changed = True
    while changed:
        changed = False
        remaining = []
        for rule in pending:
            if all(b in derived for b in rule.body):
                if rule.head not in derived:
                    derived.add(rule.head)
                changed = True
            else:
                remaining.append(rule)
        pending = remaining
    return frozenset(derived)


def strict_closure(literals: Iterable[Literal], rules: Iterable[Rule]) -> frozenset[Literal]:
    """Forward closure under the strict rules only."""
    return forward_closure(literals, [r for r in rules if r.is_strict])


def is_directly_consistent(literals: Iterable[Literal]) -> bool:
    """True when no literal occurs together with its complement."""
    pool = set(literals)
    return not any(l.complement() in pool for l in pool)


def complementary_pairs(literals: Iterable[Literal]) -> list[tuple[Literal, Literal]]:
    """All complementary pairs present, positive member first, sorted."""
    pool = set(literals)
    pairs = {
        (l, l.complement()) if not l.negated else (l.complement(), l)
        for l in pool
        if l.complement() in pool
    }
    return sorted(pairs, key=lambda p: p[0].sort_key)


def is_indirectly_consistent(literals: Iterable[Literal], rules: Iterable[Rule]) -> bool:
    """True when the strict closure of ``literals`` is directly consistent."""
    return is_directly_consistent(strict_closure(literals, rules))


def transpose(rules: Iterable[Rule]) -> tuple[Rule, ...]:
    """Close strict rules under transposition.

    For every strict rule ``h <- b1..bn`` and position i, the rule
    ``~bi <- b1..bi-1, ~h, bi+1..bn`` is added, repeatedly, until no new
    rule (by signature) appears.  Derived rules are labelled
    ``<origin id>.t1``, ``.t2``, ... in discovery order.  Non-strict
    inputs are rejected.
    """
    base = list(rules)
    for rule in base:
        if not rule.is_strict:
            raise ValueError(f"transpose expects strict rules, got {rule.id}")
    out: list[Rule] = list(base)
    signatures = {r.signature for r in base}
    counters = {r.id: 0 for r in base}
    origin = {r.id: r.id for r in base}
    queue = list(base)
    while queue:
        rule = queue.pop(0)
        root = origin[rule.id]
        for i, body_lit in enumerate(rule.body):
            new_head = body_lit.complement()
            new_body = rule.body[:i] + (rule.head.complement(),) + rule.body[i + 1:]
            deduped = tuple(dict.fromkeys(new_body))
            signature = (RuleKind.STRICT, new_head, frozenset(deduped))
            if signature in signatures:
                continue
            signatures.add(signature)
            counters[root] += 1
            new_rule = Rule(f"{root}.t{counters[root]}", RuleKind.STRICT, new_head, deduped)
            origin[new_rule.id] = root
            out.append(new_rule)
            queue.append(new_rule)
    return tuple(out)


# ======================================================================
# Concrete syntax
# ======================================================================

class _LineScanner:
    """Single-line scanner with 1-based column reporting."""

    def __init__(self, text: str, line_no: int):
        self.text = text
        self.line_no = line_no
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(f"syntax error: {message}", self.line_no, self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str, what: str) -> None:
        if not self.take(token):
            raise self.error(f"expected {what}")

    def identifier(self) -> str:
        self.skip_ws()
        match = _IDENT.match(self.text, self.pos)
        if not match:
            raise self.error("expected identifier")
        self.pos = match.end()
        return match.group(0)

    def literal(self) -> Literal:
        self.skip_ws()
        negated = self.take("~")
        return Literal(self.identifier(), negated)


@dataclass
class _Clause:
    line_no: int
    label: str | None
    kind: RuleKind | None  # None = fact
    head: Literal
    body: tuple[Literal, ...]


_PRIO = re.compile(r"#prio\s+([A-Za-z_][A-Za-z0-9_.]*)\s+(-?\d+)\s*$")
_PREFER = re.compile(r"#prefer\s*\{([^{}]*)\}\s*>\s*\{([^{}]*)\}\s*$")
_ORDERING = re.compile(r"#ordering\s+(explicit|simple|lastlink)\s*$")


def _split_id_list(raw: str, line_no: int) -> frozenset[str]:
    ids = [part.strip() for part in raw.split(",") if part.strip()]
    if not ids:
        raise ParseError("syntax error: empty rule-id set in preference", line_no, 1)
    return frozenset(ids)


def _parse_clause(scanner: _LineScanner) -> _Clause:
    label: str | None = None
    if scanner.take("["):
        label = scanner.identifier()
        scanner.expect("]", "']' after rule label")
    head = scanner.literal()
    kind: RuleKind | None = None
    body: tuple[Literal, ...] = ()
    if scanner.take("<-"):
        kind = RuleKind.STRICT
    elif scanner.take("-<"):
        kind = RuleKind.DEFEASIBLE
    if kind is not None:
        items: list[Literal] = []
        if scanner.peek() != ".":
            items.append(scanner.literal())
            while scanner.take(","):
                items.append(scanner.literal())
        body = tuple(dict.fromkeys(items))
    scanner.expect(".", "'.' at end of statement")
    if not scanner.at_end():
        raise scanner.error("unexpected text after '.'")
    if kind is None and label is not None:
        raise ParseError("syntax error: labels are only allowed on rules",
                         scanner.line_no, 1)
    return _Clause(scanner.line_no, label, kind, head, body)


def parse_literal(text: str) -> Literal:
    """Parse a bare literal such as ``p`` or ``~p``."""
    stripped = text.strip()
    negated = stripped.startswith("~")
    name = stripped[1:].strip() if negated else stripped
    if not _IDENT.fullmatch(name):
        raise ParseError(f"syntax error: not a literal: {text!r}")
    return Literal(name, negated)


def parse_program(text: str) -> Program:
    """Parse the concrete syntax into a validated Program.

    Raises ParseError with line/column context for syntax errors, and
    without position for whole-program violations (duplicate labels or
    rules, unknown ids in declarations, a contradictory strict part).
    """
    clauses: list[_Clause] = []
    priorities: list[tuple[str, int, int]] = []  # (id, rank, line)
    preferences: list[tuple[frozenset[str], frozenset[str], int]] = []
    ordering: OrderingMode | None = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("%", 1)[0]
        if not content.strip():
            continue
        stripped = content.strip()
        if stripped.startswith("#"):
            if match := _PRIO.match(stripped):
                priorities.append((match.group(1), int(match.group(2)), line_no))
            elif match := _PREFER.match(stripped):
                preferences.append((
                    _split_id_list(match.group(1), line_no),
                    _split_id_list(match.group(2), line_no),
                    line_no,
                ))
            elif match := _ORDERING.match(stripped):
                if ordering is not None:
                    raise ParseError("duplicate ordering declaration", line_no, 1)
                ordering = OrderingMode(match.group(1))
            else:
                raise ParseError(f"syntax error: unrecognised directive: {stripped.split()[0]}",
                                 line_no, 1)
            continue
        clauses.append(_parse_clause(_LineScanner(content, line_no)))

    facts: set[Literal] = set()
    strict: list[Rule] = []
    defeasible: list[Rule] = []
    label_lines: dict[str, int] = {}
    signature_lines: dict[tuple, int] = {}
    auto = {RuleKind.STRICT: 0, RuleKind.DEFEASIBLE: 0}

    for clause in clauses:
        if clause.kind is None:
            facts.add(clause.head)
            continue
        if clause.kind is RuleKind.STRICT and not clause.body:
            raise ParseError("syntax error: strict rule requires a non-empty body",
                             clause.line_no, 1)
        if clause.label is None:
            auto[clause.kind] += 1
            prefix = "s" if clause.kind is RuleKind.STRICT else "d"
            label = f"{prefix}{auto[clause.kind]}"
        else:
            label = clause.label
        if label in label_lines:
            raise ParseError(f"duplicate rule label: {label}", clause.line_no, 1)
        label_lines[label] = clause.line_no
        rule = Rule(label, clause.kind, clause.head, clause.body)
        if rule.signature in signature_lines:
            raise ParseError(f"duplicate rule: {rule}", clause.line_no, 1)
        signature_lines[rule.signature] = clause.line_no
        (strict if rule.is_strict else defeasible).append(rule)

    known = {r.id for r in strict} | {r.id for r in defeasible}
    for rule_id, rank, line_no in priorities:
        if rule_id not in known:
            raise ParseError(f"priority for unknown rule: {rule_id}", line_no, 1)
    priority_pairs = {}
    for rule_id, rank, line_no in priorities:
        if rule_id in priority_pairs and priority_pairs[rule_id] != rank:
            raise ParseError(f"conflicting priorities for rule: {rule_id}", line_no, 1)
        priority_pairs[rule_id] = rank

    return make_program(
        facts=facts,
        strict_rules=strict,
        defeasible_rules=defeasible,
        priorities=priority_pairs.items(),
        preferences=[(s, w) for s, w, _ in preferences],
        ordering_mode=ordering or OrderingMode.EXPLICIT,
    )


def format_program(program: Program) -> str:
    """Render a program in the concrete syntax; parse(format(p)) == p."""
    lines: list[str] = []
    for literal in sorted(program.facts, key=lambda l: l.sort_key):
        lines.append(f"{literal}.")
    for rule in program.rules:
        lines.append(str(rule))
    for rule_id, rank in sorted(program.priorities):
        lines.append(f"#prio {rule_id} {rank}")
    for stronger, weaker in sorted(program.preferences,
                                   key=lambda p: (sorted(p[0]), sorted(p[1]))):
        left = ", ".join(sorted(stronger))
        right = ", ".join(sorted(weaker))
        lines.append(f"#prefer {{{left}}} > {{{right}}}")
    lines.append(f"#ordering {program.ordering_mode.value}")
    return "\n".join(lines) + "\n"
