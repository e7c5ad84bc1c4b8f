"""Abstract argumentation frameworks and their extension semantics.

A Framework is a finite set of opaque hashable argument handles plus a
defeat relation between them.  Semantics follow the standard fixpoint
characterisations: the grounded extension is the least fixpoint of the
defence operator; complete extensions are conflict-free fixpoints;
preferred extensions are maximal admissible sets; stable extensions are
admissible sets defeating everything outside themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable, Hashable, Iterable

from .errors import FrameworkTooLargeError, ParseError

Handle = Hashable


class Semantics(Enum):
    GROUNDED = "grounded"
    COMPLETE = "complete"
    PREFERRED = "preferred"
    STABLE = "stable"


class Mode(Enum):
    SCEPTICAL = "sceptical"
    CREDULOUS = "credulous"


@dataclass(frozen=True)
class Framework:
    """Arguments plus a defeat relation, both immutable."""

    arguments: tuple[Handle, ...]
    defeats: frozenset[tuple[Handle, Handle]]

    @cached_property
    def defeaters_of(self) -> dict[Handle, frozenset[Handle]]:
        index: dict[Handle, set[Handle]] = {a: set() for a in self.arguments}
        for source, target in self.defeats:
            index[target].add(source)
        return {a: frozenset(s) for a, s in index.items()}

    @cached_property
    def targets_of(self) -> dict[Handle, frozenset[Handle]]:
        index: dict[Handle, set[Handle]] = {a: set() for a in self.arguments}
        for source, target in self.defeats:
            index[source].add(target)
        return {a: frozenset(s) for a, s in index.items()}

    def strictly_defeats(self, a: Handle, b: Handle) -> bool:
        """Defeat that is not answered by a defeat in the other direction."""
        return (a, b) in self.defeats and (b, a) not in self.defeats


def make_framework(arguments: Iterable[Handle],
                   defeats: Iterable[tuple[Handle, Handle]]) -> Framework:
    args = tuple(arguments)
    known = set(args)
    pairs = frozenset(defeats)
    for source, target in pairs:
        if source not in known or target not in known:
            raise ValueError(f"defeat references unknown argument: {(source, target)}")
    return Framework(args, pairs)


# ======================================================================
# Core notions
# ======================================================================

def is_conflict_free(framework: Framework, candidate: Iterable[Handle]) -> bool:
    pool = set(candidate)
    return not any(s in pool and t in pool for s, t in framework.defeats)


def defends(framework: Framework, candidate: Iterable[Handle], argument: Handle) -> bool:
    """True when every defeater of ``argument`` is defeated by the set."""
    pool = set(candidate)
    for attacker in framework.defeaters_of[argument]:
        if not framework.defeaters_of[attacker] & pool:
            return False
    return True


def is_admissible(framework: Framework, candidate: Iterable[Handle]) -> bool:
    pool = set(candidate)
    return is_conflict_free(framework, pool) and all(
        defends(framework, pool, a) for a in pool
    )


def _defended_set(framework: Framework, pool: set[Handle]) -> set[Handle]:
    return {a for a in framework.arguments if defends(framework, pool, a)}


def grounded(framework: Framework) -> frozenset[Handle]:
    """Least fixpoint of the defence operator."""
    current: set[Handle] = set()
    while True:
        advanced = _defended_set(framework, current)
        if advanced == current:
            return frozenset(current)
        current = advanced


# ======================================================================
# Extension enumeration
# ======================================================================

EXTENSION_BOUND = 24


def extensions(framework: Framework, semantics: Semantics,
               bound: int = EXTENSION_BOUND) -> frozenset[frozenset[Handle]]:
    """All extensions under the given semantics.

    Everything except grounded enumerates candidate sets, so frameworks
    with more than ``bound`` arguments are refused.  Candidates range over
    the grounded extension plus subsets of the contested region (arguments
    neither in the grounded extension nor defeated by it): every complete
    extension has that shape, and preferred/stable extensions are complete.
    """
    if semantics is Semantics.GROUNDED:
        return frozenset({grounded(framework)})
    if len(framework.arguments) > bound:
        raise FrameworkTooLargeError(
            f"framework too large: {len(framework.arguments)} arguments exceeds bound {bound}"
        )
    base = grounded(framework)
    defeated_by_base = {t for b in base for t in framework.targets_of[b]}
    contested = [a for a in framework.arguments
                 if a not in base and a not in defeated_by_base]

    candidates: list[set[Handle]] = []

    def extend(index: int, chosen: set[Handle]) -> None:
        if index == len(contested):
            candidates.append(set(base) | chosen)
            return
        arg = contested[index]
        extend(index + 1, chosen)
        clash = (
            arg in framework.targets_of[arg]
            or any((arg, c) in framework.defeats or (c, arg) in framework.defeats
                   for c in chosen)
            or any((arg, b) in framework.defeats or (b, arg) in framework.defeats
                   for b in base)
        )
        if not clash:
            chosen.add(arg)
            extend(index + 1, chosen)
            chosen.remove(arg)

    extend(0, set())

    complete = [
        pool for pool in candidates
        if all(defends(framework, pool, a) for a in pool)
        and _defended_set(framework, pool) <= pool
    ]
    if semantics is Semantics.COMPLETE:
        return frozenset(frozenset(p) for p in complete)
    if semantics is Semantics.PREFERRED:
        return frozenset(
            frozenset(p) for p in complete
            if not any(p < q for q in complete)
        )
    if semantics is Semantics.STABLE:
        universe = set(framework.arguments)
        out = []
        for pool in complete:
            defeated = {t for s in pool for t in framework.targets_of[s]}
            if defeated == universe - pool:
                out.append(frozenset(pool))
        return frozenset(out)
    raise ValueError(f"unknown semantics: {semantics}")


def justified(framework: Framework, argument: Handle, semantics: Semantics,
              mode: Mode = Mode.SCEPTICAL, bound: int = EXTENSION_BOUND) -> bool:
    """Membership in all (sceptical) or some (credulous) extension."""
    exts = extensions(framework, semantics, bound)
    if mode is Mode.SCEPTICAL:
        return all(argument in e for e in exts)
    return any(argument in e for e in exts)


# ======================================================================
# Text round-trip and DOT export
# ======================================================================

def format_framework(framework: Framework,
                     name_of: Callable[[Handle], str] = str) -> str:
    """Line format: one ``arg <id>`` per argument, one ``att <a> <b>`` per defeat."""
    names = {a: name_of(a) for a in framework.arguments}
    if len(set(names.values())) != len(names):
        raise ValueError("argument names are not unique")
    lines = [f"arg {names[a]}" for a in framework.arguments]
    lines += sorted(f"att {names[s]} {names[t]}" for s, t in framework.defeats)
    return "\n".join(lines) + "\n"


def parse_framework(text: str) -> Framework:
    """Inverse of format_framework over string handles."""
    arguments: list[str] = []
    seen: set[str] = set()
    defeats: set[tuple[str, str]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("%", 1)[0].strip()
        if not content:
            continue
        parts = content.split()
        if parts[0] == "arg" and len(parts) == 2:
            if parts[1] in seen:
                raise ParseError(f"duplicate argument: {parts[1]}", line_no, 1)
            seen.add(parts[1])
            arguments.append(parts[1])
        elif parts[0] == "att" and len(parts) == 3:
            if parts[1] not in seen:
                raise ParseError(f"unknown argument: {parts[1]}", line_no, 1)
            if parts[2] not in seen:
                raise ParseError(f"unknown argument: {parts[2]}", line_no, 1)
            defeats.add((parts[1], parts[2]))
        else:
            raise ParseError("syntax error: expected 'arg <id>' or 'att <id> <id>'",
                             line_no, 1)
    return Framework(tuple(arguments), frozenset(defeats))


def framework_to_dot(framework: Framework,
                     name_of: Callable[[Handle], str] = str,
                     highlight: Iterable[Handle] = ()) -> str:
    """GraphViz digraph; highlighted arguments are drawn filled."""
    chosen = set(highlight)
    lines = ["digraph framework {", "  rankdir=LR;", "  node [shape=box];"]
    names = {a: name_of(a) for a in framework.arguments}
    for arg in framework.arguments:
        style = ' style=filled fillcolor="lightgrey"' if arg in chosen else ""
        lines.append(f'  "{names[arg]}" [label="{names[arg]}"{style}];')
    for source, target in sorted(framework.defeats,
                                 key=lambda p: (names[p[0]], names[p[1]])):
        lines.append(f'  "{names[source]}" -> "{names[target]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
