from fractions import Fraction

import pytest

from app.exactalg import Scalar, parse_scalar
from app.tableaux import (
    HRHOMBUS,
    SQUARE,
    VRHOMBUS,
    InvalidSector,
    InvalidTableau,
    InvalidWord,
    Word,
    build_diagram,
    check_reflection_symmetry,
    enumerate_tableaux,
    gen_R,
    gen_Rtilde,
    parse_word,
    partition_Z,
    partition_Ztilde,
    strips_from_geometry,
    tableau_from_json,
    tableau_from_text,
    tableau_to_json,
    validate_tableau,
    verify_matrix_ansatz,
    verify_validator,
)
from app.tableaux.reference import (
    EXPECTED_COUNTS,
    EXPECTED_R,
    EXPECTED_RTILDE,
    SEVEN_SITE_WEIGHT,
    seven_site_tableau,
    verify_reference_values,
)
from app.tableaux.tableau import tableau_text, weight_exponents


def test_word_encodings_agree():
    w = Word((1, 0, -1))
    assert parse_word("b s o") == w
    assert parse_word("+0-") == w
    assert parse_word("•∗○") == w
    assert parse_word("+1,0,-1") == w
    assert str(w) == "bso" and w.spaced() == "b s o"
    assert w.reflected() == Word((1, 0, -1))


def test_bad_letter():
    with pytest.raises(InvalidWord):
        parse_word("bx")


@pytest.mark.parametrize("word,count", sorted(EXPECTED_COUNTS.items()))
def test_tableau_counts(word, count):
    assert gen_R(parse_word(word)).tableaux == count


def test_star_only_word_has_one_empty_tableau():
    assert build_diagram(parse_word("ss")).tiles == ()
    assert gen_R(parse_word("ss")).value == 1


@pytest.mark.parametrize("word", sorted(EXPECTED_R))
def test_generating_polynomial(word):
    assert gen_R(parse_word(word)).value == parse_scalar(EXPECTED_R[word])


def test_canonical_text_of_R_os():
    assert str(gen_R(parse_word("os"))) == "beta*t^2 + beta*gamma*t + gamma*t + gamma*delta"


@pytest.mark.parametrize("word", sorted(EXPECTED_RTILDE))
def test_normalised_polynomial(word):
    assert gen_Rtilde(parse_word(word)) == parse_scalar(EXPECTED_RTILDE[word])


@pytest.mark.parametrize("r", range(6))
def test_rtilde_of_stars_is_one(r):
    assert gen_Rtilde(Word((0,) * r)) == Scalar(1)


def test_seven_site_tableau():
    tab = seven_site_tableau()
    assert validate_tableau(tab) == []
    assert weight_exponents(tab) == SEVEN_SITE_WEIGHT


def test_tableau_parsers_restore_a_filling():
    tab = seven_site_tableau()
    assert tableau_from_json(tableau_to_json(tab)) == tab
    assert tableau_from_text(tab.word, tableau_text(tab)) == tab


def test_tableau_parsers_reject_bad_fillings():
    obj = tableau_to_json(seven_site_tableau())
    obj["tiles"][0]["letter"] = "omega"
    with pytest.raises(InvalidTableau):
        tableau_from_json(obj)
    with pytest.raises(InvalidTableau):
        tableau_from_json({"word": "bb"})
    with pytest.raises(InvalidTableau):
        tableau_from_text(parse_word("bb"), "a")
    with pytest.raises(InvalidTableau):
        tableau_from_text(parse_word("bb"), "x..")
    n_tiles = len(build_diagram(parse_word("bb")).tiles)
    with pytest.raises(InvalidTableau):
        tableau_from_text(parse_word("bb"), "a" * n_tiles)


def test_seven_site_diagram_shape():
    d = build_diagram(parse_word("bsosbbo"))
    assert d.count(SQUARE) == 15
    assert d.count(VRHOMBUS) == 3
    assert d.count(HRHOMBUS) == 7
    assert len(d.west_strips) == len(d.north_strips) == 5
    west, north = strips_from_geometry(d)
    assert sorted(west) == sorted(d.west_strips.values())
    assert sorted(north) == sorted(d.north_strips.values())
    assert sorted(d.border_tiles()) == list(range(1, 8))


def test_every_enumerated_tableau_validates():
    assert all(validate_tableau(t) == [] for t in enumerate_tableaux(parse_word("bsob")))
    assert verify_validator(3).passed


def test_partition_function_one_site(g):
    assert partition_Z(1, 0).value == g["alpha"] + g["beta"] + g["gamma"] + g["delta"]
    assert partition_Ztilde(1, 1) == 1
    with pytest.raises(InvalidSector):
        partition_Z(2, 3)


def test_weighted_count_evaluates_exactly():
    vals = {"alpha": Fraction(1, 2), "beta": 1, "gamma": 1, "delta": Fraction(1, 3), "t": Fraction(1, 2)}
    assert gen_R(parse_word("b")).evaluate(vals) == Fraction(5, 6)


def test_reference_values():
    assert verify_reference_values().passed


def test_matrix_ansatz_small():
    assert verify_matrix_ansatz(2).passed


@pytest.mark.slow
def test_matrix_ansatz_up_to_three_letters():
    rep = verify_matrix_ansatz(3)
    assert rep.passed, rep.failures


@pytest.mark.slow
def test_reflection_report_covers_every_word():
    rep = check_reflection_symmetry(3)
    assert len(rep.results) == 3 + 9 + 27
    one_site = [r for r in rep.results if r.name in ("R(b) ~ R(o)", "R(s) ~ R(s)", "R(o) ~ R(b)")]
    assert len(one_site) == 3 and all(r.passed for r in one_site)
