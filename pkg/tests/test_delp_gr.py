import random

from argeo import (
    a_rebut_witnesses,
    delp_arguments,
    delp_framework,
    grounded_arguments,
    native_witnesses,
    ua_rebut_witnesses,
    warrant,
    warrant_gr,
    warranted_literals,
    warranted_literals_gr,
)
from argeo.randgen import random_program
from conftest import lit, load_fixture


def argument(program, text):
    return next(a for a in delp_arguments(program) if a.text == text)


def edge_texts(framework):
    return {(a.text, b.text) for a, b in framework.defeats}


# ----------------------------------------------------------------------
# Framework construction
# ----------------------------------------------------------------------

def test_edges_are_proper_or_blocking_defeats():
    program = load_fixture("blocking2")
    framework = delp_framework(program)
    assert edge_texts(framework) == {
        ("<{d3,d4}, ~r>", "<{d1,d2}, r>"),   # proper (declared preference)
        ("<{d5}, ~t>", "<{d3}, t>"),         # blocking, both directions
        ("<{d3}, t>", "<{d5}, ~t>"),
        ("<{d5}, ~t>", "<{d3,d4}, ~r>"),     # blocking, lands on the t step
    }
    # the failed attack r -> ~r (strictly weaker attacker) adds no edge
    assert ("<{d1,d2}, r>", "<{d3,d4}, ~r>") not in edge_texts(framework)


def test_edges_hit_every_vulnerable_subargument_owner():
    program = load_fixture("subarg_game")
    framework = delp_framework(program)
    attacker = argument(program, "<{d7,d8}, ~s>")
    hit = {t for a, t in edge_texts(framework) if a == attacker.text}
    # both the s argument and the larger argument built on it are targets
    assert hit == {"<{d4,d5}, s>", "<{d4,d5,d6}, ~q>"}


# ----------------------------------------------------------------------
# Grounded acceptance
# ----------------------------------------------------------------------

def test_subarg_game_grounded_pin():
    program = load_fixture("subarg_game")
    accepted = grounded_arguments(program)
    assert {a.text for a in accepted} == {
        "<{}, f1>", "<{}, f2>", "<{}, f3>", "<{}, f4>",
        "<{d1}, p>", "<{d4}, r>", "<{d4,d5}, s>", "<{d4,d5,d6}, ~q>",
    }
    assert warrant_gr(program, lit("p"))
    assert not warrant(program, lit("p"))[0]  # the tree semantics blocks E


def test_blocking2_diverges_from_tree_semantics():
    program = load_fixture("blocking2")
    assert warrant(program, lit("r"))[0]
    assert not warrant_gr(program, lit("r"))
    assert warranted_literals_gr(program) == {lit("p"), lit("s"), lit("u"), lit("q")}


def test_lastlink_fixture_agrees_across_engines():
    program = load_fixture("lastlink")
    assert warranted_literals(program) == warranted_literals_gr(program) \
        == {lit("f1"), lit("f2"), lit("p"), lit("q"), lit("~r")}


def test_concordance_fixture_grounded_is_facts_only():
    program = load_fixture("concordance")
    assert warranted_literals_gr(program) == {
        lit("f1"), lit("f2"), lit("f3"), lit("f4"),
    }


# ----------------------------------------------------------------------
# Pluggable witness functions
# ----------------------------------------------------------------------

def test_witness_function_changes_the_framework(married_john):
    native = delp_framework(married_john)
    restricted = delp_framework(married_john, witnesses=a_rebut_witnesses)
    unrestricted = delp_framework(married_john, witnesses=ua_rebut_witnesses)
    assert native.arguments == restricted.arguments == unrestricted.arguments
    assert edge_texts(restricted) <= edge_texts(unrestricted)
    # hw cannot attack ~hw at its strict final step under the restricted
    # notion, only at the defeasible step underneath (which concludes b,
    # not the complement of hw) -- so that edge needs the unrestricted one
    assert ("<{d1}, hw>", "<{d2}, ~hw>") not in edge_texts(restricted)
    assert ("<{d1}, hw>", "<{d2}, ~hw>") in edge_texts(unrestricted)


def test_native_witnesses_report_points_and_subs():
    program = load_fixture("blocking1")
    attacker = argument(program, "<{d3,d4}, ~r>")
    target = argument(program, "<{d1,d2}, r>")
    assert native_witnesses(program, attacker, target) == (
        (lit("r"), target),
    )
    assert native_witnesses(program, target, attacker) == (
        (lit("~r"), attacker),
    )


# ----------------------------------------------------------------------
# Random agreement with the dialectical-tree engine on easy programs
# ----------------------------------------------------------------------

def test_gr_accepts_all_facts_on_random_programs():
    rng = random.Random(17)
    for _ in range(30):
        program = random_program(rng, n_defeasible=5)
        accepted = warranted_literals_gr(program)
        assert program.facts <= accepted
