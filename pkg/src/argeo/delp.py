"""Defeasible-derivation engine: arguments, defeaters, dialectical trees.

An argument for a literal is a minimal set of defeasible rules that,
together with the facts and strict rules, derives the literal without
enabling a contradiction.  Counterarguments land on attack points (the
heads of the target's rules, plus its conclusion); whether they defeat
depends on how the ordering compares them with the disagreement
subargument.  A literal is warranted when some argument for it roots a
dialectical tree whose root is marked U (undefeated) after exploring all
acceptable argumentation lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import EngineError
from .lang import (
    Literal,
    Program,
    Rule,
    forward_closure,
    is_directly_consistent,
    strict_closure,
)
from .orderings import Ordering, Relation, StrengthKey, ordering_for


# ======================================================================
# Derivations
# ======================================================================

class StepKind(Enum):
    FACT = "fact"
    PRESUMPTION = "presumption"
    STRICT_RULE = "strict"
    DEFEASIBLE_RULE = "defeasible"


@dataclass(frozen=True)
class Step:
    literal: Literal
    kind: StepKind
    rule: Rule | None = None


Derivation = tuple[Step, ...]


def format_derivation(derivation: Derivation) -> str:
    parts = []
    for step in derivation:
        tag = step.rule.id if step.rule is not None else step.kind.value
        parts.append(f"{step.literal}({tag})")
    return ", ".join(parts)


def _step_kind(rule: Rule) -> StepKind:
    if rule.is_strict:
        return StepKind.STRICT_RULE
    return StepKind.PRESUMPTION if not rule.body else StepKind.DEFEASIBLE_RULE


def _build_witness(program: Program, rules: frozenset[Rule], conclusion: Literal) -> Derivation:
    """Canonical derivation of ``conclusion`` from the facts, the strict
    rules, and exactly the defeasible rules in ``rules`` (strict steps are
    preferred, so minimality of ``rules`` forces every one to be used)."""
    ordered = list(program.strict_rules) + sorted(rules, key=lambda r: r.id)
    known: dict[Literal, Step] = {
        f: Step(f, StepKind.FACT) for f in sorted(program.facts, key=lambda l: l.sort_key)
    }
    changed = True
    while changed:
        changed = False
        for rule in ordered:
            if rule.head in known:
                continue
            if all(b in known for b in rule.body):
                known[rule.head] = Step(rule.head, _step_kind(rule), rule)
                changed = True
    if conclusion not in known:
        raise EngineError(f"no derivation of {conclusion} from the given rules")

    steps: list[Step] = []
    visited: set[Literal] = set()

    def emit(literal: Literal) -> None:
        if literal in visited:
            return
        visited.add(literal)
        step = known[literal]
        if step.rule is not None:
            for body_literal in step.rule.body:
                emit(body_literal)
        steps.append(step)

    emit(conclusion)
    return tuple(steps)


# ======================================================================
# Arguments
# ======================================================================

@dataclass(frozen=True)
class DelpArgument:
    """A minimal, contradiction-free set of defeasible rules supporting a
    conclusion, with a canonical witnessing derivation."""

    rules: frozenset[Rule]
    conclusion: Literal
    witness: Derivation

    @cached_property
    def rule_ids(self) -> frozenset[str]:
        return frozenset(r.id for r in self.rules)

    @cached_property
    def heads(self) -> frozenset[Literal]:
        return frozenset(r.head for r in self.rules)

    @cached_property
    def attack_points(self) -> frozenset[Literal]:
        return self.heads | {self.conclusion}

    @cached_property
    def last_rule_ids(self) -> frozenset[str]:
        """Ids of the final defeasible rules along the witness's paths."""
        step_of = {step.literal: step for step in self.witness}

        def last(literal: Literal) -> frozenset[str]:
            step = step_of[literal]
            if step.kind is StepKind.FACT:
                return frozenset()
            if step.kind in (StepKind.PRESUMPTION, StepKind.DEFEASIBLE_RULE):
                return frozenset({step.rule.id})
            out: frozenset[str] = frozenset()
            for body_literal in step.rule.body:
                out |= last(body_literal)
            return out

        return last(self.conclusion)

    @cached_property
    def strength_key(self) -> StrengthKey:
        return StrengthKey(self.rule_ids, self.last_rule_ids)

    @cached_property
    def text(self) -> str:
        inner = ",".join(sorted(self.rule_ids))
        return f"<{{{inner}}}, {self.conclusion}>"

    @property
    def sort_key(self) -> tuple[int, tuple[str, ...], tuple[str, bool]]:
        return (len(self.rules), tuple(sorted(self.rule_ids)), self.conclusion.sort_key)

    def is_subargument_of(self, other: "DelpArgument") -> bool:
        return self.rules <= other.rules

    def __str__(self) -> str:
        return self.text


# ======================================================================
# Universe of arguments
# ======================================================================

def _insert_minimal(pool: set[frozenset[Rule]], candidate: frozenset[Rule]) -> bool:
    """Antichain insert; returns True when the pool changed."""
    if any(existing <= candidate for existing in pool):
        return False
    for existing in [s for s in pool if candidate < s]:
        pool.discard(existing)
    pool.add(candidate)
    return True


@lru_cache(maxsize=None)
def _minimal_supports(program: Program) -> dict[Literal, frozenset[frozenset[Rule]]]:
    """For every literal, the minimal defeasible-rule sets that derive it
    (together with the facts and strict rules), consistent or not."""
    supports: dict[Literal, set[frozenset[Rule]]] = {
        f: {frozenset()} for f in program.facts
    }
    changed = True
    while changed:
        changed = False
        for rule in program.rules:
            pools = [supports.get(b) for b in rule.body]
            if any(not pool for pool in pools):
                continue
            extra = frozenset({rule}) if rule.is_defeasible else frozenset()
            target = supports.setdefault(rule.head, set())
            for combo in product(*pools):
                candidate = extra.union(*combo) if combo else extra
                if _insert_minimal(target, candidate):
                    changed = True
    return {lit: frozenset(pool) for lit, pool in supports.items()}


@lru_cache(maxsize=None)
def _consistent_closure(program: Program, rules: frozenset[Rule]) -> bool:
    closure = forward_closure(program.facts, program.strict_rules + tuple(rules))
    return is_directly_consistent(closure)


def make_argument(program: Program, rules: frozenset[Rule], conclusion: Literal) -> DelpArgument:
    """Build the canonical argument for a minimal support set."""
    if rules not in _minimal_supports(program).get(conclusion, frozenset()):
        raise EngineError(
            f"{sorted(r.id for r in rules)} is not a minimal support for {conclusion}"
        )
    witness = _build_witness(program, rules, conclusion)
    used = frozenset(
        s.rule for s in witness
        if s.kind in (StepKind.PRESUMPTION, StepKind.DEFEASIBLE_RULE)
    )
    if used != rules:
        raise EngineError(f"canonical witness for {conclusion} skipped rules "
                          f"{sorted(r.id for r in rules - used)}")
    return DelpArgument(rules, conclusion, witness)


@lru_cache(maxsize=None)
def _universe(program: Program) -> tuple[DelpArgument, ...]:
    out: list[DelpArgument] = []
    for literal, pools in _minimal_supports(program).items():
        for rules in pools:
            if _consistent_closure(program, rules):
                out.append(make_argument(program, rules, literal))
    return tuple(sorted(out, key=lambda a: a.sort_key))


def delp_arguments(program: Program, goal: Literal | None = None) -> tuple[DelpArgument, ...]:
    """All arguments of the program, or those concluding ``goal``."""
    args = _universe(program)
    if goal is None:
        return args
    return tuple(a for a in args if a.conclusion == goal)


def derive(program: Program, goal: Literal) -> Derivation | None:
    """A shortest defeasible derivation of ``goal`` (no consistency demand),
    or None when the goal is underivable."""
    pools = _minimal_supports(program).get(goal)
    if not pools:
        return None
    witnesses = [
        _build_witness(program, rules, goal)
        for rules in sorted(pools, key=lambda rs: (len(rs), sorted(r.id for r in rs)))
    ]
    return min(witnesses, key=lambda w: (len(w), format_derivation(w)))


def has_strict_derivation(program: Program, goal: Literal) -> bool:
    return goal in strict_closure(program.facts, program.strict_rules)


def disagree(program: Program, first: Literal, second: Literal) -> bool:
    """The two literals cannot jointly stand with the strict part."""
    closure = strict_closure(program.facts | {first, second}, program.strict_rules)
    return not is_directly_consistent(closure)


# ======================================================================
# Counterarguments and defeaters
# ======================================================================

@lru_cache(maxsize=None)
def _restricted_supports(program: Program, rules: frozenset[Rule],
                         point: Literal) -> tuple[frozenset[Rule], ...]:
    """Minimal subsets of ``rules`` deriving ``point``; these are exactly
    the subargument supports at that point."""
    found: list[frozenset[Rule]] = []
    pool = sorted(rules, key=lambda r: r.id)
    for size in range(len(pool) + 1):
        for combo in combinations(pool, size):
            subset = frozenset(combo)
            if any(smaller <= subset for smaller in found):
                continue
            closure = forward_closure(program.facts, program.strict_rules + combo)
            if point in closure:
                found.append(subset)
    return tuple(found)


def subarguments_at(program: Program, argument: DelpArgument,
                    point: Literal) -> tuple[DelpArgument, ...]:
    """The argument's minimal subarguments concluding ``point``."""
    subs = [
        make_argument(program, rules, point)
        for rules in _restricted_supports(program, argument.rules, point)
    ]
    return tuple(sorted(subs, key=lambda a: a.sort_key))


@dataclass(frozen=True)
class Counterargument:
    attacker: DelpArgument
    point: Literal
    disagreement_sub: DelpArgument


def counterarguments(program: Program, target: DelpArgument) -> tuple[Counterargument, ...]:
    """Every (attacker, point, disagreement-subargument) triple against the
    target, over all arguments of the program."""
    out: list[Counterargument] = []
    for point in sorted(target.attack_points, key=lambda l: l.sort_key):
        subs = subarguments_at(program, target, point)
        for attacker in _universe(program):
            if not disagree(program, attacker.conclusion, point):
                continue
            for sub in subs:
                out.append(Counterargument(attacker, point, sub))
    return tuple(out)


class DefeatKind(Enum):
    PROPER = "proper"
    BLOCKING = "blocking"


@dataclass(frozen=True)
class Defeater:
    argument: DelpArgument
    kind: DefeatKind
    point: Literal
    disagreement_sub: DelpArgument


def defeater_kind(ordering: Ordering, attacker: DelpArgument,
                  disagreement_sub: DelpArgument) -> DefeatKind | None:
    """PROPER when the disagreement subargument is strictly weaker than the
    attacker, BLOCKING when the two do not compare, None when the
    subargument is strictly stronger (the attack fails)."""
    relation = ordering.compare(disagreement_sub.strength_key, attacker.strength_key)
    if relation is Relation.LESS:
        return DefeatKind.PROPER
    if relation is Relation.INCOMPARABLE:
        return DefeatKind.BLOCKING
    return None


def defeaters(program: Program, target: DelpArgument,
              ordering: Ordering | None = None) -> tuple[Defeater, ...]:
    """All defeaters of the target, one entry per attacking argument; an
    attacker with both proper and blocking witnesses counts as proper."""
    ordering = ordering or ordering_for(program)
    per_attacker: dict[DelpArgument, list[tuple[DefeatKind, Literal, DelpArgument]]] = {}
    for ca in counterarguments(program, target):
        kind = defeater_kind(ordering, ca.attacker, ca.disagreement_sub)
        if kind is None:
            continue
        per_attacker.setdefault(ca.attacker, []).append(
            (kind, ca.point, ca.disagreement_sub)
        )
    out: list[Defeater] = []
    for attacker in sorted(per_attacker, key=lambda a: a.sort_key):
        witnesses = per_attacker[attacker]
        proper = [w for w in witnesses if w[0] is DefeatKind.PROPER]
        chosen = proper if proper else witnesses
        kind, point, sub = min(
            chosen, key=lambda w: (w[1].sort_key, w[2].sort_key)
        )
        out.append(Defeater(attacker, kind, point, sub))
    return tuple(out)


# ======================================================================
# Argumentation lines and dialectical trees
# ======================================================================

@dataclass(frozen=True)
class LineEntry:
    argument: DelpArgument
    kind: DefeatKind | None  # None only for the root


def concordant(program: Program, arguments: Iterable[DelpArgument]) -> bool:
    """A set of arguments whose rule sets can jointly stand with the facts
    and strict rules."""
    pooled: set[Rule] = set()
    for argument in arguments:
        pooled |= argument.rules
    closure = forward_closure(program.facts, program.strict_rules + tuple(pooled))
    return is_directly_consistent(closure)


def acceptable_extension(program: Program, line: Sequence[LineEntry],
                         candidate: DelpArgument, kind: DefeatKind) -> bool:
    """Whether appending ``candidate`` (defeating the line's last argument
    with ``kind``) keeps the argumentation line acceptable: the candidate's
    side stays concordant, the candidate is not a subargument of anything
    earlier, and a blocking defeat must be answered by a proper one."""
    index = len(line)
    side = [entry.argument for i, entry in enumerate(line) if i % 2 == index % 2]
    if not concordant(program, side + [candidate]):
        return False
    if any(candidate.rules <= entry.argument.rules for entry in line):
        return False
    if line[-1].kind is DefeatKind.BLOCKING and kind is not DefeatKind.PROPER:
        return False
    return True


class Mark(Enum):
    U = "U"  # undefeated
    D = "D"  # defeated


@dataclass(frozen=True)
class TreeNode:
    argument: DelpArgument
    kind: DefeatKind | None
    children: tuple["TreeNode", ...]
    mark: Mark


def build_tree(program: Program, root: DelpArgument,
               ordering: Ordering | None = None) -> TreeNode:
    """The dialectical tree under the acceptable-line conditions, marked
    bottom-up: leaves are U; an inner node is U exactly when every child
    is D."""
    ordering = ordering or ordering_for(program)

    def grow(line: list[LineEntry]) -> TreeNode:
        target = line[-1].argument
        children: list[TreeNode] = []
        for defeater in defeaters(program, target, ordering):
            if not acceptable_extension(program, line, defeater.argument, defeater.kind):
                continue
            entry = LineEntry(defeater.argument, defeater.kind)
            children.append(grow(line + [entry]))
        if children:
            mark = Mark.U if all(c.mark is Mark.D for c in children) else Mark.D
        else:
            mark = Mark.U
        return TreeNode(target, line[-1].kind, tuple(children), mark)

    return grow([LineEntry(root, None)])


def warrant(program: Program, goal: Literal,
            ordering: Ordering | None = None) -> tuple[bool, TreeNode | None]:
    """Whether some argument for ``goal`` roots an undefeated tree; returns
    the first certifying tree in deterministic argument order."""
    for argument in delp_arguments(program, goal):
        tree = build_tree(program, argument, ordering)
        if tree.mark is Mark.U:
            return True, tree
    return False, None


def trees(program: Program, goal: Literal,
          ordering: Ordering | None = None) -> tuple[TreeNode, ...]:
    return tuple(
        build_tree(program, argument, ordering)
        for argument in delp_arguments(program, goal)
    )


def warranted_literals(program: Program,
                       ordering: Ordering | None = None) -> frozenset[Literal]:
    out = set()
    for literal in sorted({a.conclusion for a in _universe(program)},
                          key=lambda l: l.sort_key):
        if warrant(program, literal, ordering)[0]:
            out.add(literal)
    return frozenset(out)


# ======================================================================
# Exports
# ======================================================================

def tree_to_text(node: TreeNode) -> str:
    lines: list[str] = []

    def walk(current: TreeNode, depth: int) -> None:
        prefix = "  " * depth
        tag = f"[{current.kind.value}] " if current.kind else ""
        lines.append(f"{prefix}{tag}{current.mark.value} {current.argument}")
        for child in current.children:
            walk(child, depth + 1)

    walk(node, 0)
    return "\n".join(lines) + "\n"


def tree_to_dot(node: TreeNode) -> str:
    lines = ["digraph dialectical_tree {", "  node [shape=box];"]
    counter = 0

    def walk(current: TreeNode) -> str:
        nonlocal counter
        counter += 1
        me = f"n{counter}"
        fill = ' style=filled fillcolor="lightgrey"' if current.mark is Mark.D else ""
        lines.append(f'  {me} [label="{current.mark.value} {current.argument}"{fill}];')
        for child in current.children:
            child_id = walk(child)
            lines.append(f'  {me} -> {child_id} [label="{child.kind.value}"];')
        return me

    walk(node)
    lines.append("}")
    return "\n".join(lines) + "\n"
