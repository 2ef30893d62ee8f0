from fractions import Fraction

import pytest

from app.exactalg import (
    ArityMismatch,
    Denominator,
    DivisionByZero,
    LaurentPoly,
    NotDivisible,
    Scalar,
    ScalarParseError,
    Substitution,
    SubstitutionSingular,
    laurent_arith,
    laurent_divide_exact,
    numeric_point,
    parse_scalar,
    q_one,
    scalar_arith,
)
from app.exactalg.checks import (
    verify_change_of_variables,
    verify_field_axioms,
    verify_laurent_division,
    verify_substitution_homomorphism,
)


def z(n, i, p=1):
    return LaurentPoly.var(n, i, p)


def test_parse_handles_caret_and_unicode(g):
    assert parse_scalar("alpha^2*t + β") == g["alpha"] ** 2 * g["t"] + g["beta"]
    assert parse_scalar("(t - 1)/(a*c)") == (g["t"] - 1) / (g["a"] * g["c"])


def test_parse_rejects_unknown_symbols():
    with pytest.raises(ScalarParseError):
        parse_scalar("x + 1")
    with pytest.raises(ScalarParseError):
        parse_scalar("")


def test_division_by_zero(g):
    with pytest.raises(DivisionByZero):
        g["t"] / (g["t"] - g["t"])
    with pytest.raises(DivisionByZero):
        Scalar(0).inverse()


def test_canonical_form_is_unique(g):
    x = (g["a"] ** 2 - 1) / (g["a"] - 1)
    assert x == g["a"] + 1
    assert x.is_polynomial()
    assert str(-g["t"] + 1) == "-t + 1"


def test_scalar_json_restores_value(g):
    x = (g["alpha"] * g["t"] - Fraction(1, 3)) / (g["gamma"] + 2)
    assert Scalar.from_json(x.to_json()) == x


def test_field_axioms_hold():
    assert verify_field_axioms(30, seed=1).passed


@pytest.mark.slow
def test_field_axioms_on_many_samples():
    rep = verify_field_axioms(1000, seed=0)
    assert rep.passed, rep.failures


def test_substitution_is_a_homomorphism():
    rep = verify_substitution_homomorphism(25, seed=0)
    assert rep.passed, rep.failures


def test_change_of_variables_identities():
    assert verify_change_of_variables().passed


def test_substitutions(g):
    assert q_one()(parse_scalar("q*t + 1")) == g["t"] + 1
    assert numeric_point({"t": "1/2"})(g["t"] ** 2) == Fraction(1, 4)
    with pytest.raises(SubstitutionSingular):
        Substitution({"a": 1})(1 / (g["a"] - 1))


def test_laurent_exact_division():
    f = z(2, 1) + z(2, 2, -1)
    d = z(2, 1) - z(2, 2)
    assert laurent_divide_exact(f * d, d) == f
    with pytest.raises(NotDivisible):
        laurent_divide_exact(z(1, 1), z(1, 1) + 1)
    with pytest.raises(DivisionByZero):
        laurent_divide_exact(z(1, 1), LaurentPoly.zero(1))
    assert verify_laurent_division(5, seed=0).passed


def test_laurent_arity_is_checked():
    with pytest.raises(ArityMismatch):
        z(2, 1) + z(3, 1)
    with pytest.raises(ArityMismatch):
        z(2, 3)


def test_laurent_text_and_evaluation(g):
    f = z(2, 1) * z(2, 2, -1) - 1
    assert str(f) == "z1*z2^-1 - 1"
    assert (f.scale(g["t"]) + 2).evaluate_at_one() == 2
    assert LaurentPoly.from_json(f.to_json()) == f


def test_named_arithmetic(g):
    assert scalar_arith(g["t"], g["t"], "div") == 1
    assert scalar_arith(g["alpha"], g["beta"], "sub") == g["alpha"] - g["beta"]
    with pytest.raises(DivisionByZero):
        scalar_arith(g["t"], Scalar(0), "div")
    with pytest.raises(ValueError):
        scalar_arith(g["t"], g["t"], "pow")
    f = z(2, 1) - 1
    assert laurent_arith(f, f, "mul") == f * f
    with pytest.raises(ArityMismatch):
        laurent_arith(f, z(3, 1), "add")


def _den(x):
    return Denominator.of(x.raw.numer)[1]


def test_denominators_combine_by_exponent(g):
    lam = g["alpha"] * g["beta"] * g["t"] - g["gamma"] * g["delta"]
    d1 = _den(lam ** 2)
    d2 = _den(lam * (g["t"] - 1))
    assert d1.lcm(d2) == d1 * _den(g["t"] - 1)
    assert d1.gcd(d2) == _den(lam)
    assert d2.cofactor(d1.lcm(d2)) * d2.expand() == d1.lcm(d2).expand()
    assert Denominator.one().is_one()
    with pytest.raises(ValueError):
        d2 / d1


def test_laurent_keeps_a_shared_denominator(g):
    lam = g["alpha"] * g["beta"] * g["t"] - g["gamma"] * g["delta"]
    f = z(2, 1).scale(1 / lam) + z(2, 2).scale(1 / (lam * (g["t"] - 1)))
    assert f.denominator == _den(lam * (g["t"] - 1))
    assert f.coefficient((1, 0)) == 1 / lam
    assert f * (lam * (g["t"] - 1)) == z(2, 1).scale(g["t"] - 1) + z(2, 2)
    assert f - z(2, 1).scale(1 / lam) == z(2, 2).scale(1 / (lam * (g["t"] - 1)))


def test_substitution_of_laurent_matches_each_coefficient(g):
    lam = g["alpha"] * g["beta"] * g["t"] - g["gamma"] * g["delta"]
    f = z(2, 1).scale(g["a"] / lam) + z(2, 2, -1).scale(1 / (g["t"] - 1)) - g["q"]
    sub = Substitution({"t": "q", "alpha": "a*t - 1"})
    image = sub(f)
    for e, c in f.items():
        assert image.coefficient(e) == sub(c)
    with pytest.raises(SubstitutionSingular):
        Substitution({"t": 1})(f)
