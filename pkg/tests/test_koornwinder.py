import pytest

from app.exactalg import LaurentPoly, q_one
from app.hecke import HeckeContext
from app.koornwinder import (
    InvalidShape,
    LengthMismatch,
    NotAntidominant,
    NotAPartition,
    asep_poly_F,
    eigen_data,
    koornwinder_K,
    koornwinder_K_via_ek,
    koornwinder_q1,
    orbit_of,
    order_preceq,
    parse_partition,
    symmetric_check,
    verify_eigen,
    verify_q1,
    verify_qkz,
    verify_structure,
    verify_ek_expansion,
)
from app.koornwinder.eigen import verify_all_eigen, verify_worked_instance
from app.koornwinder.orbit import below
from app.koornwinder.symmetric import DEFAULT_SHAPES, ExpansionMismatch, column_word, conjugate, product_form
from app.tableaux import InvalidSector, Word, gen_Rtilde, parse_word, partition_Ztilde


def z(n, i, p=1):
    return LaurentPoly.var(n, i, p)


def test_orbits():
    orb = orbit_of(Word((1, 0)))
    assert set(orb.members) == {Word(w) for w in [(1, 0), (-1, 0), (0, 1), (0, -1)]}
    assert orb.delta == Word((-1, 0))
    assert orbit_of(Word((0, 0))).members == (Word((0, 0)),)
    full = orbit_of(Word((1, 1)))
    assert len(full) == 4 and full.delta == Word((-1, -1))


def test_partition_parsing():
    assert parse_partition("110") == Word((1, 1, 0))
    for bad in ("01", "1-", ""):
        with pytest.raises(NotAPartition):
            parse_partition(bad)


def test_order_matches_worked_list():
    mu = (-2, 0)
    expected = {(-2, 0), (1, 1), (1, -1), (-1, 1), (-1, -1), (1, 0), (-1, 0), (0, 1), (0, -1), (0, 0)}
    assert set(below(mu, 2)) == expected
    assert order_preceq((0, 0), mu) and order_preceq((1, 1), mu)
    assert not order_preceq((0, -2), mu)
    with pytest.raises(LengthMismatch):
        order_preceq((0,), mu)


def test_small_F_polynomials():
    n = 2
    assert asep_poly_F(Word((0, 0))) == 1
    rt = lambda w: gen_Rtilde(parse_word(w))  # noqa: E731
    assert asep_poly_F(Word((1, 0))) == (z(n, 1) - 1 + rt("bs"))
    expected = LaurentPoly.constant(n, rt("bb")) + (z(n, 1) + z(n, 2) - 2).scale(rt("b")) + (z(n, 1) - 1) * (z(n, 2) - 1)
    assert asep_poly_F(Word((1, 1))) == expected


def test_K_of_zero_partition_is_one():
    assert koornwinder_K(Word((0, 0, 0))) == 1


def test_K_is_symmetric():
    K = koornwinder_K(Word((1, 0)))
    assert symmetric_check(K, 2)
    assert symmetric_check(K, 2, q_is_one=True)


def test_structure_n2():
    rep = verify_structure(2)
    assert rep.passed, rep.failures


def test_eigen_data(g):
    d = eigen_data((-1, -1))
    assert d.blocks == (2,) and d.rho == (0, -1)
    assert d.eigenvalues == (g["t"] / g["q"], 1 / (g["q"] * g["t"]))
    d = eigen_data((-1, 0))
    assert d.rho[0] == -1 and d.eigenvalues[0] == 1 / g["q"]
    ctx = HeckeContext.symbolic(3)
    d = eigen_data((0, 0, 0))
    assert d.eigenvalues == tuple(ctx.t0 * ctx.tN * g["t"] ** (6 - 2 * i) for i in (1, 2, 3))
    for bad in ((0, -1), (1, 0), ()):
        with pytest.raises(NotAntidominant):
            eigen_data(bad)


def test_ek_expansion_values():
    assert koornwinder_K_via_ek(2, 2) == 1
    expected = z(1, 1) + z(1, 1, -1) - 2 + partition_Ztilde(1, 0)
    assert koornwinder_K_via_ek(1, 0) == expected
    with pytest.raises(InvalidSector):
        koornwinder_K_via_ek(2, 3)


def test_ek_expansion_matches_orbit_sums():
    assert verify_ek_expansion(2).passed


def test_q1_expansion():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((2,)) == (1, 1)
    assert koornwinder_q1((1,), 2) == koornwinder_K_via_ek(2, 1)
    assert koornwinder_q1((2,), 2) == product_form((2,), 2)
    assert verify_q1(DEFAULT_SHAPES, 2).passed
    with pytest.raises(InvalidShape):
        koornwinder_q1((1, 1, 1), 2)


def test_qkz_at_random_points():
    rep = verify_qkz(Word((1, 0)), points=2, seed=3)
    assert rep.passed, rep.failures


def test_qkz_one_site_symbolic():
    assert verify_qkz(Word((1,))).passed


@pytest.mark.slow
@pytest.mark.parametrize("lam", ["00", "10", "11", "110", "111", "100", "000"])
def test_qkz_symbolic(lam):
    rep = verify_qkz(parse_partition(lam))
    assert rep.passed, rep.failures


@pytest.mark.slow
def test_worked_eigen_instance():
    assert verify_worked_instance().passed


@pytest.mark.slow
@pytest.mark.parametrize(
    "delta", [(-1,), (0, 0), (-1, 0), (-1, -1), (-1, -1, -1), (-1, -1, 0), (-1, 0, 0), (0, 0, 0)]
)
def test_eigenvalue_equations(delta):
    rep = verify_eigen(delta)
    assert rep.passed, rep.failures


@pytest.mark.slow
def test_ek_expansion_n3():
    assert verify_ek_expansion(3).passed
    assert verify_q1(DEFAULT_SHAPES, 3).passed


@pytest.mark.slow
def test_qkz_four_sites_at_random_points():
    rep = verify_qkz(parse_partition("1111"), points=3, seed=0)
    assert rep.passed, rep.failures


@pytest.mark.slow
def test_every_antidominant_eigen_instance_up_to_three_sites():
    rep = verify_all_eigen(3)
    assert rep.passed, rep.failures


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4])
def test_structure(n):
    rep = verify_structure(n)
    assert rep.passed, rep.failures


@pytest.mark.slow
def test_ek_expansion_n4():
    rep = verify_ek_expansion(4)
    assert rep.passed, rep.failures


def test_q1_checks_the_product_and_the_column_polynomial():
    rep = verify_q1([(1,), (2,), (1, 1)], 2)
    assert rep.passed, rep.failures
    names = " ".join(r.name for r in rep.results)
    assert "K" in names
    assert q_one()(koornwinder_K(column_word(1, 2))) == koornwinder_q1((1,), 2)


def test_q1_rejects_a_disagreeing_product(monkeypatch):
    from app.koornwinder import symmetric

    monkeypatch.setattr(symmetric, "product_form", lambda shape, n: LaurentPoly.one(n))
    with pytest.raises(ExpansionMismatch):
        symmetric.koornwinder_q1((1,), 2)
