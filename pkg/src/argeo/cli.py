"""Command-line interface.

Exit codes: 0 success, 1 usage problem, 2 malformed input program,
3 engine failure (budget exceeded, framework too large, missing priority,
unsatisfied precondition, corpus mismatch).
"""

from __future__ import annotations

import argparse
import difflib
import io
import sys
from contextlib import redirect_stdout
from pathlib import Path

from . import fixtures
from .afsem import Mode, Semantics, extensions, grounded
from .aspic import AttackKind, build_structured, construct_arguments
from .correspondence import Pairing, verify_equivalence
from .delp import (
    counterarguments,
    defeater_kind,
    delp_arguments,
    tree_to_dot,
    tree_to_text,
    trees,
    warrant,
)
from .delp_gr import delp_framework, warrant_gr
from .errors import ArgeoError, ParseError
from .game import provably_justified, strategy_to_dot, strategy_to_text
from .lang import format_program, parse_literal, parse_program
from .orderings import ordering_for
from .postulates import audit_aspic, audit_delp, audit_delp_gr
from .report import write_report


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage failures exit with code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_program(path: str):
    return parse_program(Path(path).read_text())


def _aspic_names(arguments) -> dict:
    return {argument: f"A{i}" for i, argument in enumerate(arguments, start=1)}


# ======================================================================
# Command handlers
# ======================================================================

def cmd_parse(ns) -> int:
    program = _read_program(ns.file)
    sys.stdout.write(format_program(program))
    return 0


def cmd_args(ns) -> int:
    program = _read_program(ns.file)
    if ns.engine == "aspic":
        arguments = construct_arguments(program, ns.budget)
        names = _aspic_names(arguments)
        for argument in arguments:
            print(f"{names[argument]}: {argument.text}")
    else:
        for argument in delp_arguments(program):
            print(argument.text)
    return 0


def cmd_attacks(ns) -> int:
    program = _read_program(ns.file)
    if ns.engine == "aspic":
        structured = build_structured(program, AttackKind(ns.attack), budget=ns.budget)
        names = _aspic_names(structured.arguments)
        rows = sorted(
            structured.attacks,
            key=lambda a: (names[a.attacker], names[a.target], names[a.witness]),
        )
        for attack in rows:
            flag = "Y" if structured.attack_defeats(attack) else "N"
            print(f"{names[attack.attacker]} {attack.kind.value} "
                  f"{names[attack.target]} at {names[attack.witness]} defeat={flag}")
    else:
        ordering = ordering_for(program)
        for target in delp_arguments(program):
            for ca in counterarguments(program, target):
                kind = defeater_kind(ordering, ca.attacker, ca.disagreement_sub)
                verdict = kind.value if kind else "none"
                print(f"{ca.attacker} vs {target} at {ca.point} "
                      f"sub {ca.disagreement_sub} -> {verdict}")
    return 0


def cmd_tree(ns) -> int:
    program = _read_program(ns.file)
    goal = parse_literal(ns.goal)
    forest = trees(program, goal)
    if not forest:
        print(f"no argument for {goal}")
        return 0
    for index, tree in enumerate(forest, start=1):
        print(f"tree {index}:")
        sys.stdout.write(tree_to_text(tree))
    if ns.dot:
        Path(ns.dot).write_text(tree_to_dot(forest[0]))
    return 0


def cmd_warrant(ns) -> int:
    program = _read_program(ns.file)
    goal = parse_literal(ns.goal)
    if ns.gr:
        verdict = warrant_gr(program, goal)
        print(f"warrant_gr({goal}) = {'YES' if verdict else 'NO'}")
    else:
        verdict, _ = warrant(program, goal)
        print(f"warrant({goal}) = {'YES' if verdict else 'NO'}")
    return 0


def _framework_for(ns, program):
    if ns.engine == "aspic":
        structured = build_structured(program, AttackKind(ns.attack), budget=ns.budget)
        names = _aspic_names(structured.arguments)
        return structured.to_framework(), names
    framework = delp_framework(program)
    return framework, {a: a.text for a in framework.arguments}


def cmd_extensions(ns) -> int:
    program = _read_program(ns.file)
    framework, names = _framework_for(ns, program)
    pools = sorted(
        extensions(framework, Semantics(ns.semantics)),
        key=lambda ext: tuple(sorted(names[a] for a in ext)),
    )
    for pool in pools:
        members = ", ".join(sorted(names[a] for a in pool))
        conclusions = ", ".join(sorted({str(a.conclusion) for a in pool}))
        print(f"ext {{{members}}} concs {{{conclusions}}}")
    return 0


def cmd_justify(ns) -> int:
    program = _read_program(ns.file)
    goal = parse_literal(ns.goal)
    framework, _ = _framework_for(ns, program)
    pools = extensions(framework, Semantics(ns.semantics))
    holds = [any(a.conclusion == goal for a in pool) for pool in pools]
    verdict = all(holds) if Mode(ns.mode) is Mode.SCEPTICAL else any(holds)
    print(f"justified({goal}) = {'YES' if verdict else 'NO'}")
    return 0


def cmd_game(ns) -> int:
    program = _read_program(ns.file)
    goal = parse_literal(ns.goal)
    framework, names = _framework_for(ns, program)
    candidates = [a for a in framework.arguments if a.conclusion == goal]
    winning = None
    for argument in candidates:
        ok, strategy = provably_justified(framework, argument)
        print(f"game {names[argument]}: {'WIN' if ok else 'LOSS'}")
        if ok:
            sys.stdout.write(strategy_to_text(strategy, names.__getitem__))
            if winning is None:
                winning = strategy
    verdict = "YES" if winning is not None else "NO"
    print(f"provably justified({goal}) = {verdict}")
    if ns.dot and winning is not None:
        Path(ns.dot).write_text(strategy_to_dot(winning, names.__getitem__))
    return 0


_POSTULATE_CONFIGS = (
    ("delp", None),
    ("delp-gr", None),
    ("aspic", AttackKind.REBUT),
    ("aspic", AttackKind.UREBUT),
    ("aspic", AttackKind.DLPREBUT),
)


def cmd_postulates(ns) -> int:
    program = _read_program(ns.file)

    def report(engine: str, attack: AttackKind | None, semantics: Semantics) -> None:
        if engine == "delp":
            _, result = audit_delp(program)
            print(f"engine=delp extension=0 {result.summary()}")
        elif engine == "delp-gr":
            _, result = audit_delp_gr(program)
            print(f"engine=delp-gr extension=0 {result.summary()}")
        else:
            audits = audit_aspic(program, attack, semantics, budget=ns.budget)
            for audit in audits:
                print(f"engine=aspic attack={attack.value} "
                      f"semantics={semantics.value} extension={audit.index} "
                      f"{audit.result.summary()}")

    if ns.all:
        for engine, attack in _POSTULATE_CONFIGS:
            report(engine, attack, Semantics.GROUNDED)
    else:
        attack = AttackKind(ns.attack) if ns.engine == "aspic" else None
        report(ns.engine, attack, Semantics(ns.semantics))
    return 0


def cmd_compare(ns) -> int:
    program = _read_program(ns.file)
    pairings = list(Pairing) if ns.all else [Pairing(ns.pairing)]
    for pairing in pairings:
        for line in verify_equivalence(program, pairing).lines():
            print(line)
    return 0


def cmd_report(ns) -> int:
    program = _read_program(ns.file)
    goals = [parse_literal(g) for g in ns.goal]
    written = write_report(program, Path(ns.out), goals)
    for path in written:
        print(f"wrote {path}")
    return 0


# ======================================================================
# Bundled corpus
# ======================================================================

def _render_fixture(fixture: fixtures.Fixture) -> str:
    sections: list[str] = []
    path = fixtures.fixture_path(fixture)
    for template in fixture.commands:
        argv = [part.replace("{file}", str(path)) for part in template]
        shown = [part.replace("{file}", fixture.filename) for part in template]
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            code = main(argv)
        section = f"$ argeo {' '.join(shown)}\n{buffer.getvalue()}"
        if code != 0:
            section += f"exit {code}\n"
        sections.append(section)
    return "\n".join(sections)


def cmd_corpus(ns) -> int:
    chosen = [
        f for f in fixtures.MANIFEST
        if ns.name is None or f.name == ns.name
    ]
    if ns.name is not None and not chosen:
        print(f"error: unknown fixture: {ns.name}", file=sys.stderr)
        return 1
    if ns.list:
        for fixture in chosen:
            print(fixture.name)
        return 0
    mismatches = 0
    for fixture in chosen:
        actual = _render_fixture(fixture)
        golden = fixtures.golden_path(fixture)
        if ns.regen:
            golden.write_text(actual)
            print(f"regenerated {fixture.name}")
            continue
        expected = golden.read_text()
        if actual == expected:
            print(f"OK {fixture.name}")
        else:
            mismatches += 1
            print(f"MISMATCH {fixture.name}")
            diff = difflib.unified_diff(
                expected.splitlines(), actual.splitlines(),
                fromfile=f"{fixture.name}.golden", tofile="computed", lineterm="",
            )
            for line in diff:
                print(line)
    if not ns.regen:
        print(f"{len(chosen) - mismatches} ok, {mismatches} mismatched")
    return 3 if mismatches else 0


# ======================================================================
# Parser wiring
# ======================================================================

def build_parser() -> _Parser:
    parser = _Parser(prog="argeo", description=__doc__)
    parser.add_argument("--budget", type=int, default=None,
                        help="argument-construction budget (default from "
                             "ARGEO_ARG_BUDGET or 100000)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    def add_budget(p: argparse.ArgumentParser) -> None:
        # SUPPRESS keeps the top-level --budget value unless the flag is
        # repeated after the subcommand.
        p.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                       help="argument-construction budget")

    p = add("parse", cmd_parse, help="validate a program and echo its canonical form")
    p.add_argument("file")

    p = add("args", cmd_args, help="list the arguments a program supports")
    p.add_argument("file")
    p.add_argument("--engine", choices=["aspic", "delp"], default="aspic")
    add_budget(p)

    p = add("attacks", cmd_attacks, help="list attacks (with witnesses) and defeats")
    p.add_argument("file")
    p.add_argument("--engine", choices=["aspic", "delp"], default="aspic")
    p.add_argument("--attack", choices=[k.value for k in AttackKind], default="rebut")
    add_budget(p)

    p = add("tree", cmd_tree, help="print marked dialectical trees for a goal")
    p.add_argument("file")
    p.add_argument("goal")
    p.add_argument("--dot", default=None, help="write the first tree as DOT")

    p = add("warrant", cmd_warrant, help="decide warrant for a goal")
    p.add_argument("file")
    p.add_argument("goal")
    p.add_argument("--gr", action="store_true",
                   help="use the grounded variant instead of tree marking")

    p = add("extensions", cmd_extensions, help="enumerate extensions")
    p.add_argument("file")
    p.add_argument("--engine", choices=["aspic", "delp-gr"], default="aspic")
    p.add_argument("--attack", choices=[k.value for k in AttackKind], default="rebut")
    p.add_argument("--semantics", choices=[s.value for s in Semantics],
                   default="grounded")
    add_budget(p)

    p = add("justify", cmd_justify, help="decide justification of a goal literal")
    p.add_argument("file")
    p.add_argument("goal")
    p.add_argument("--engine", choices=["aspic", "delp-gr"], default="aspic")
    p.add_argument("--attack", choices=[k.value for k in AttackKind], default="rebut")
    p.add_argument("--semantics", choices=[s.value for s in Semantics],
                   default="grounded")
    p.add_argument("--mode", choices=[m.value for m in Mode], default="sceptical")
    add_budget(p)

    p = add("game", cmd_game, help="play the grounded game for a goal")
    p.add_argument("file")
    p.add_argument("goal")
    p.add_argument("--engine", choices=["aspic", "delp-gr"], default="delp-gr")
    p.add_argument("--attack", choices=[k.value for k in AttackKind], default="rebut")
    p.add_argument("--dot", default=None, help="write the winning strategy as DOT")
    add_budget(p)

    p = add("postulates", cmd_postulates, help="audit consistency and closure")
    p.add_argument("file")
    p.add_argument("--engine", choices=["delp", "delp-gr", "aspic"], default="delp")
    p.add_argument("--attack", choices=[k.value for k in AttackKind], default="rebut")
    p.add_argument("--semantics", choices=[s.value for s in Semantics],
                   default="grounded")
    p.add_argument("--all", action="store_true",
                   help="audit every engine under grounded acceptance")
    add_budget(p)

    p = add("compare", cmd_compare, help="cross-check the two engines per argument")
    p.add_argument("file")
    p.add_argument("--pairing", choices=[p.value for p in Pairing], default="dlprebut")
    p.add_argument("--all", action="store_true", help="run all three pairings")

    p = add("corpus", cmd_corpus, help="check bundled example programs against goldens")
    p.add_argument("--name", default=None, help="run a single fixture")
    p.add_argument("--list", action="store_true", help="list fixture names")
    p.add_argument("--regen", action="store_true",
                   help="rewrite the bundled goldens (maintainer tool)")

    p = add("report", cmd_report, help="write a TSV summary and PNG figures")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.add_argument("--goal", action="append", default=[],
                   help="also render the dialectical tree for this goal "
                        "(repeatable)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    try:
        return ns.func(ns)
    except ParseError as error:
        print(f"parse error: {error}", file=sys.stderr)
        return 2
    except ArgeoError as error:
        print(f"error: {error}", file=sys.stderr)
        return 3
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
