"""Seeded random generators used by the stress suites and the CLI."""

from __future__ import annotations

import random
from typing import Sequence

from .afsem import Framework
from .aspic import construct_arguments
from .delp import delp_arguments
from .errors import ArgeoError, ParseError
from .lang import Literal, OrderingMode, Program, Rule, RuleKind, make_program


def random_framework(rng: random.Random, n_arguments: int,
                     edge_probability: float = 0.25) -> Framework:
    """A framework over string handles with independent random defeats."""
    arguments = tuple(f"a{i}" for i in range(1, n_arguments + 1))
    defeats = frozenset(
        (source, target)
        for source in arguments
        for target in arguments
        if rng.random() < edge_probability
    )
    return Framework(arguments, defeats)


def _random_literal(rng: random.Random, atoms: Sequence[str]) -> Literal:
    return Literal(rng.choice(list(atoms)), rng.random() < 0.4)


def random_program(rng: random.Random,
                   atoms: Sequence[str] = ("a", "b", "c", "d", "e"),
                   n_facts: int = 2,
                   n_strict: int = 2,
                   n_defeasible: int = 5,
                   max_body: int = 2,
                   ordering_mode: OrderingMode = OrderingMode.EXPLICIT,
                   max_attempts: int = 1000) -> Program:
    """A random well-formed program (consistent strict part, no duplicate
    rules).  Last-link mode assigns every defeasible rule a priority."""
    for _ in range(max_attempts):
        facts = {
            Literal(atom, rng.random() < 0.25)
            for atom in rng.sample(list(atoms), min(n_facts, len(atoms)))
        }
        rules: list[Rule] = []
        signatures: set[tuple] = set()

        def add_rule(kind: RuleKind, index: int, allow_empty_body: bool) -> None:
            head = _random_literal(rng, atoms)
            lower = 0 if allow_empty_body and rng.random() < 0.2 else 1
            size = rng.randint(lower, max_body)
            body: list[Literal] = []
            for _ in range(size):
                literal = _random_literal(rng, atoms)
                if literal != head and literal not in body:
                    body.append(literal)
            if kind is RuleKind.STRICT and not body:
                body.append(_random_literal(rng, [a for a in atoms if a != head.atom]))
            prefix = "s" if kind is RuleKind.STRICT else "d"
            rule = Rule(f"{prefix}{index}", kind, head, tuple(body))
            if rule.signature not in signatures:
                signatures.add(rule.signature)
                rules.append(rule)

        for i in range(1, n_strict + 1):
            add_rule(RuleKind.STRICT, i, allow_empty_body=False)
        for i in range(1, n_defeasible + 1):
            add_rule(RuleKind.DEFEASIBLE, i, allow_empty_body=True)

        strict = [r for r in rules if r.is_strict]
        defeasible = [r for r in rules if r.is_defeasible]
        priorities = (
            [(r.id, rng.randint(1, 5)) for r in defeasible]
            if ordering_mode is OrderingMode.LASTLINK else []
        )
        try:
            return make_program(
                facts=facts,
                strict_rules=strict,
                defeasible_rules=defeasible,
                priorities=priorities,
                ordering_mode=ordering_mode,
            )
        except ParseError:
            continue
    raise ArgeoError("could not generate a well-formed random program")


def random_simplified_program(rng: random.Random,
                              atoms: Sequence[str] = ("a", "b", "c", "d"),
                              max_arguments: int = 60,
                              max_attempts: int = 10000,
                              **kwargs) -> Program:
    """Rejection-sample random programs until one is simplified, has at
    least one derivation argument, and stays small enough to compare."""
    from .correspondence import is_simplified

    for _ in range(max_attempts):
        program = random_program(rng, atoms=atoms, **kwargs)
        if len(construct_arguments(program)) > max_arguments:
            continue
        if not delp_arguments(program):
            continue
        if is_simplified(program)[0]:
            return program
    raise ArgeoError("could not generate a simplified random program")
