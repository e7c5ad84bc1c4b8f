import random

import pytest

from argeo import (
    NotSimplifiedError,
    Pairing,
    a_rebut_witnesses,
    aspic_to_delp,
    construct_arguments,
    delp_arguments,
    delp_to_aspic,
    is_simplified,
    parse_program,
    ua_rebut_witnesses,
    verify_equivalence,
)
from argeo.randgen import random_simplified_program
from conftest import lit, load_fixture


def delp_argument(program, text):
    return next(a for a in delp_arguments(program) if a.text == text)


# ----------------------------------------------------------------------
# The simplified-theory test
# ----------------------------------------------------------------------

def test_fixture_simplified_status():
    for name in ("married_john", "blocking1", "blocking2", "lastlink",
                 "tandem"):
        ok, violations = is_simplified(load_fixture(name))
        assert ok, (name, violations)
        assert violations == ()


def test_concordance_fixture_is_not_simplified():
    # stacking ~r on top of an r-derived subargument puts r and ~r in one
    # argument's reach
    ok, violations = is_simplified(load_fixture("concordance"))
    assert not ok
    assert any(
        v.kind == "inconsistent-reach" and "=> ~r]" in v.detail
        for v in violations
    )


def test_surf_is_not_simplified():
    ok, violations = is_simplified(load_fixture("surf"))
    assert not ok
    kinds = {v.kind for v in violations}
    assert "inconsistent-reach" in kinds
    details = [v.detail for v in violations if v.kind == "inconsistent-reach"]
    assert any(
        "strict closure of [monday => working]'s subconclusions" in d
        for d in details
    )


def test_non_minimal_violation():
    # two routes to p; one uses a strict superset of the other's rules
    program = parse_program(
        "f.\n"
        "[s1] p <- a.\n[s2] p <- b.\n"
        "[d1] a -< f.\n[d2] b -< a.\n"
    )
    ok, violations = is_simplified(program)
    assert not ok
    non_minimal = [v for v in violations if v.kind == "non-minimal"]
    assert non_minimal
    assert "['d1', 'd2']" in non_minimal[0].detail
    assert "['d1']" in non_minimal[0].detail
    assert str(non_minimal[0]).startswith("non-minimal: ")


# ----------------------------------------------------------------------
# Argument mappings
# ----------------------------------------------------------------------

def test_round_trip_on_married_john(married_john):
    tree_args = construct_arguments(married_john)
    for tree_arg in tree_args:
        derivation_arg = aspic_to_delp(married_john, tree_arg)
        assert derivation_arg.conclusion == tree_arg.conclusion
        assert derivation_arg.rule_ids \
            == {r.id for r in tree_arg.defeasible_rules}
        assert tree_arg in delp_to_aspic(married_john, derivation_arg)
    for derivation_arg in delp_arguments(married_john):
        images = delp_to_aspic(married_john, derivation_arg)
        assert images
        for image in images:
            assert aspic_to_delp(married_john, image) == derivation_arg


def test_mappings_refuse_unsimplified_theories():
    program = load_fixture("surf")
    with pytest.raises(NotSimplifiedError, match="theory not simplified"):
        aspic_to_delp(program, construct_arguments(program)[0])
    with pytest.raises(NotSimplifiedError, match="theory not simplified"):
        delp_to_aspic(program, delp_arguments(program)[0])


# ----------------------------------------------------------------------
# Derivation-side rebut notions
# ----------------------------------------------------------------------

def test_restricted_rebut_respects_final_strict_steps(married_john):
    hw = delp_argument(married_john, "<{d1}, hw>")
    nhw = delp_argument(married_john, "<{d2}, ~hw>")
    # ~hw is reached by a strict step from b, so the restricted notion
    # finds no defeasibly-derived ~hw to land on
    assert a_rebut_witnesses(married_john, hw, nhw) == ()
    assert ua_rebut_witnesses(married_john, hw, nhw) == ((lit("~hw"), nhw),)

    m = delp_argument(married_john, "<{d1}, m>")
    nm = delp_argument(married_john, "<{d2}, ~m>")
    # m itself is the head of a defeasible rule, so both notions agree
    assert a_rebut_witnesses(married_john, nm, m) == ((lit("m"), m),)
    assert ua_rebut_witnesses(married_john, nm, m) == ((lit("m"), m),)


# ----------------------------------------------------------------------
# Equivalence reports
# ----------------------------------------------------------------------

def test_married_john_reports_agree(married_john):
    for pairing in Pairing:
        report = verify_equivalence(married_john, pairing)
        assert report.simplified
        assert report.all_agree
        assert report.lines()[0] == f"pairing {pairing.value}"
        assert report.lines()[-1] == "RESULT agree"
        assert "ARG {d1} m warrant=D justified=N agree=Y" in report.lines()


def test_rows_cover_every_derivation_argument(married_john):
    report = verify_equivalence(married_john, Pairing.DLPREBUT)
    assert [row.argument for row in report.rows] \
        == list(delp_arguments(married_john))
    for row in report.rows:
        if row.agree:  # uniform image status matching warrant
            assert row.justified == row.warranted


def test_unsimplified_report_does_not_raise():
    report = verify_equivalence(load_fixture("surf"), Pairing.REBUT)
    assert not report.simplified
    assert not report.all_agree
    assert report.rows == ()
    lines = report.lines()
    assert lines[0] == "pairing rebut"
    assert lines[1] == "NOT SIMPLIFIED"
    assert any(line.lstrip().startswith("inconsistent-reach") for line in lines[2:])


def test_equivalence_on_random_simplified_programs():
    rng = random.Random(31)
    checked = 0
    for _ in range(25):
        program = random_simplified_program(rng)
        for pairing in Pairing:
            report = verify_equivalence(program, pairing)
            assert report.simplified
            assert report.all_agree, "\n".join(report.lines())
        checked += 1
    assert checked == 25
