import random

import pytest

from argeo import (
    DefeatKind,
    EngineError,
    Mark,
    acceptable_extension,
    build_tree,
    concordant,
    counterarguments,
    defeater_kind,
    defeaters,
    delp_arguments,
    derive,
    disagree,
    format_derivation,
    has_strict_derivation,
    make_argument,
    ordering_for,
    parse_program,
    subarguments_at,
    tree_to_dot,
    tree_to_text,
    trees,
    warrant,
    warranted_literals,
)
from argeo.delp import LineEntry
from argeo.randgen import random_program
from conftest import lit, load_fixture
from oracles import naive_delp_arguments


def argument(program, text):
    return next(a for a in delp_arguments(program) if a.text == text)


SURF_TEXTS = [
    "<{}, cloudy>", "<{}, dry_season>", "<{}, grass_grown>",
    "<{}, hire_gardener>", "<{}, monday>", "<{}, vacation>", "<{}, waves>",
    "<{}, ~working>",
    "<{d11}, yard_work>", "<{d12}, ~yard_work>", "<{d13}, many_surfers>",
    "<{d14}, few_surfers>", "<{d14}, ~many_surfers>", "<{d2}, nice>",
    "<{d4}, rain>", "<{d5}, ~rain>", "<{d7}, ~busy>",
    "<{d10,d11}, busy>", "<{d3,d4}, ~nice>", "<{d6,d7}, spare_time>",
    "<{d1,d2,d6,d7}, surf>",
]


# ----------------------------------------------------------------------
# Argument universe
# ----------------------------------------------------------------------

def test_surf_argument_universe():
    program = load_fixture("surf")
    assert [a.text for a in delp_arguments(program)] == SURF_TEXTS


def test_goal_filter_and_accessors():
    program = load_fixture("surf")
    (surf_arg,) = delp_arguments(program, lit("surf"))
    assert surf_arg.text == "<{d1,d2,d6,d7}, surf>"
    assert surf_arg.rule_ids == {"d1", "d2", "d6", "d7"}
    assert surf_arg.attack_points == {
        lit("surf"), lit("nice"), lit("spare_time"), lit("~busy"),
    }
    assert surf_arg.last_rule_ids == {"d1"}
    (fact_arg,) = delp_arguments(program, lit("waves"))
    assert fact_arg.rules == frozenset()
    assert fact_arg.attack_points == {lit("waves")}
    assert fact_arg.is_subargument_of(surf_arg)
    assert not surf_arg.is_subargument_of(fact_arg)


def test_arguments_are_consistent_and_minimal():
    program = load_fixture("subarg_line")
    for arg in delp_arguments(program):
        # dropping any single rule must break the derivation
        for rule in arg.rules:
            with pytest.raises(EngineError):
                make_argument(program, arg.rules - {rule}, arg.conclusion)


def test_make_argument_rejects_non_minimal_support():
    program = parse_program("f.\n[d1] p -< f.\n[d2] q -< p.\n")
    both = frozenset(program.defeasible_rules)
    with pytest.raises(EngineError, match="not a minimal support"):
        make_argument(program, both, lit("p"))


def test_contradictory_supports_yield_no_argument():
    # p is derivable, but its support strictly entails both q and ~q
    program = parse_program(
        "f.\n[s1] q <- p.\n[s2] ~q <- p.\n[d1] p -< f.\n"
    )
    assert derive(program, lit("p")) is not None
    assert delp_arguments(program, lit("p")) == ()


def test_universe_matches_bruteforce_on_random_programs():
    rng = random.Random(11)
    for _ in range(60):
        program = random_program(rng, n_defeasible=6)
        expected = naive_delp_arguments(program)
        actual = {(a.rule_ids, a.conclusion) for a in delp_arguments(program)}
        actual_ids = {(frozenset(ids), conc) for ids, conc in actual}
        assert actual_ids == expected


# ----------------------------------------------------------------------
# Derivations and disagreement
# ----------------------------------------------------------------------

def test_derive_and_strict_derivation():
    program = load_fixture("surf")
    derivation = derive(program, lit("spare_time"))
    assert derivation is not None
    assert format_derivation(derivation) \
        == "vacation(fact), ~working(s1), ~busy(d7), spare_time(d6)"
    assert derive(program, lit("ill")) is None
    assert has_strict_derivation(program, lit("~working"))
    assert not has_strict_derivation(program, lit("spare_time"))


def test_disagreement_goes_through_strict_rules():
    program = parse_program("f.\n[s1] ~p <- q.\n[d1] p -< f.\n[d2] q -< f.\n")
    assert disagree(program, lit("p"), lit("q"))
    assert disagree(program, lit("p"), lit("~p"))
    assert not disagree(program, lit("p"), lit("f"))


# ----------------------------------------------------------------------
# Counterarguments and defeaters
# ----------------------------------------------------------------------

def test_counterarguments_land_on_attack_points():
    program = load_fixture("blocking1")
    target = argument(program, "<{d1,d2}, r>")
    records = counterarguments(program, target)
    assert {(c.attacker.text, str(c.point)) for c in records} \
        == {("<{d3,d4}, ~r>", "r")}
    (record,) = records
    assert record.disagreement_sub == target


def test_defeater_kinds():
    ordering = ordering_for(load_fixture("blocking2"))
    program = load_fixture("blocking2")
    weak = argument(program, "<{d1,d2}, r>")
    strong = argument(program, "<{d3,d4}, ~r>")
    assert defeater_kind(ordering, strong, weak) is DefeatKind.PROPER
    assert defeater_kind(ordering, weak, strong) is None
    incomparable = argument(program, "<{d5}, ~t>")
    assert defeater_kind(ordering, incomparable, strong) is DefeatKind.BLOCKING


def test_defeaters_prefer_proper_witnesses():
    program = load_fixture("concordance")
    target = argument(program, "<{d1}, p>")
    records = defeaters(program, target)
    assert [(d.argument.text, d.kind.value) for d in records] \
        == [("<{d2,d3}, ~p>", "proper")]
    counter = argument(program, "<{d2,d3}, ~p>")
    kinds = {(d.argument.text, d.kind.value) for d in defeaters(program, counter)}
    assert kinds == {
        ("<{d4,d5}, ~q>", "proper"),
        ("<{d6}, ~q>", "blocking"),
    }


# ----------------------------------------------------------------------
# Argumentation-line conditions
# ----------------------------------------------------------------------

def test_concordance_check():
    program = load_fixture("concordance")
    a = argument(program, "<{d4,d5}, ~q>")
    b = argument(program, "<{d6,d7}, ~r>")
    assert concordant(program, [a])
    assert not concordant(program, [a, b])


def test_line_rejects_subargument_repetition():
    program = load_fixture("subarg_line")
    root = argument(program, "<{d1}, p>")
    counter = argument(program, "<{d2,d3,d4,d5}, ~p>")
    line = [LineEntry(root, None), LineEntry(counter, DefeatKind.PROPER)]
    repeat = argument(program, "<{d2,d3}, s>")
    # s's support sits inside the earlier ~p argument, so it may not recur
    assert repeat.rules < counter.rules
    assert not acceptable_extension(program, line, repeat, DefeatKind.PROPER)


def test_line_rejects_equal_argument():
    program = load_fixture("blocking1")
    root = argument(program, "<{d1,d2}, r>")
    line = [LineEntry(root, None)]
    assert not acceptable_extension(program, line, root, DefeatKind.PROPER)


def test_blocking_must_be_answered_properly():
    program = load_fixture("blocking1")
    root = argument(program, "<{d1,d2}, r>")
    blocker = argument(program, "<{d3,d4}, ~r>")
    answer = argument(program, "<{d5}, ~t>")
    line = [LineEntry(root, None), LineEntry(blocker, DefeatKind.BLOCKING)]
    assert not acceptable_extension(program, line, answer, DefeatKind.BLOCKING)


def test_concordance_prunes_same_side_contradiction():
    # the second pro-side argument would contradict the first
    program = parse_program(
        "fa.\nfb.\nfc.\n"
        "[d1] p -< fa.\n[d2] ~r -< p.\n"
        "[d3] q -< fb.\n[d4] ~p -< q.\n"
        "[d5] r -< fc.\n[d6] ~q -< r.\n"
        "#prefer {d3, d4} > {d1}\n"
        "#prefer {d5, d6} > {d3}\n"
        "#prefer {d1, d2} > {d5}\n"
    )
    root = argument(program, "<{d1,d2}, ~r>")
    tree = build_tree(program, root)
    assert tree.mark is Mark.D
    (child,) = tree.children
    assert child.argument.text == "<{d3,d4}, ~p>"
    assert child.kind is DefeatKind.PROPER
    assert child.mark is Mark.U
    assert child.children == ()  # <{d5,d6}, ~q> is discordant with the root
    assert not concordant(program, [root, argument(program, "<{d5,d6}, ~q>")])
    assert not warrant(program, lit("~r"))[0]


# ----------------------------------------------------------------------
# Trees and warrant
# ----------------------------------------------------------------------

def test_blocking_tree_shapes():
    one = load_fixture("blocking1")
    assert tree_to_text(build_tree(one, argument(one, "<{d1,d2}, r>"))) == (
        "D <{d1,d2}, r>\n"
        "  [blocking] U <{d3,d4}, ~r>\n"
    )
    assert not warrant(one, lit("r"))[0]

    two = load_fixture("blocking2")
    assert tree_to_text(build_tree(two, argument(two, "<{d1,d2}, r>"))) == (
        "U <{d1,d2}, r>\n"
        "  [proper] D <{d3,d4}, ~r>\n"
        "    [blocking] U <{d5}, ~t>\n"
    )
    verdict, certificate = warrant(two, lit("r"))
    assert verdict and certificate.mark is Mark.U


def test_multiple_trees_for_one_literal():
    program = load_fixture("concordance")
    roots = trees(program, lit("~q"))
    assert [t.argument.text for t in roots] == ["<{d6}, ~q>", "<{d4,d5}, ~q>"]
    assert [t.mark for t in roots] == [Mark.U, Mark.D]
    assert warrant(program, lit("~q"))[0]


def test_surf_warrants():
    program = load_fixture("surf")
    assert not warrant(program, lit("surf"))[0]
    assert not warrant(program, lit("working"))[0]
    assert tree_to_text(build_tree(program, argument(program, "<{d3,d4}, ~nice>"))) == (
        "D <{d3,d4}, ~nice>\n"
        "  [blocking] U <{d2}, nice>\n"
        "  [blocking] U <{d5}, ~rain>\n"
    )


def test_warranted_literals_pin():
    program = load_fixture("lastlink")
    assert warranted_literals(program) == {
        lit("f1"), lit("f2"), lit("p"), lit("q"), lit("~r"),
    }


def test_tree_to_dot_marks_defeated_nodes():
    program = load_fixture("blocking2")
    dot = tree_to_dot(build_tree(program, argument(program, "<{d1,d2}, r>")))
    assert dot.startswith("digraph")
    assert 'label="U <{d1,d2}, r>"' in dot
    assert 'fillcolor="lightgrey"' in dot       # the defeated middle node
    assert '[label="proper"]' in dot
    assert '[label="blocking"]' in dot
