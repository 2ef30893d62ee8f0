import dataclasses
from fractions import Fraction

import numpy as np
import pytest

from app.asep import (
    NonpositiveParam,
    ParamError,
    Reducible,
    build_generator,
    cross_validate,
    parse_params,
    sample_trajectory,
    stationary_exact,
)
from app.asep.chain import outgoing_rates, row_sums_exact
from app.asep.stationary import gth_solve, is_stationary
from app.tableaux import Word


def test_one_site_matrix(rates):
    sector = build_generator(1, 0, rates)
    assert sector.states == (Word((1,)), Word((-1,)))
    assert sector.matrix[0, 1] == Fraction(7, 24)
    assert sector.matrix[1, 0] == Fraction(7, 20)
    assert row_sums_exact(sector)


def test_all_second_class_is_frozen(rates):
    sector = build_generator(2, 2, rates)
    assert sector.size == 1 and sector.matrix[0, 0] == 1
    dist = stationary_exact(sector)
    assert dist[Word((0, 0))] == 1


def test_second_class_hop_rate(rates):
    sector = build_generator(2, 1, rates)
    i, j = sector.index(Word((1, 0))), sector.index(Word((0, 1)))
    assert sector.matrix[i, j] == rates["t"] / 3
    assert sector.matrix[j, i] == Fraction(1, 3)


def test_boundary_moves(rates):
    out = outgoing_rates(Word((-1, 0, 1)), rates)
    assert out[Word((1, 0, 1))] == rates["alpha"]
    assert out[Word((-1, 0, -1))] == rates["beta"]
    assert out[Word((-1, 1, 0))] == 1


def test_one_site_stationary(rates):
    dist = stationary_exact(build_generator(1, 0, rates))
    assert dist[Word((1,))] == Fraction(6, 11)
    assert dist.total() == 1
    assert is_stationary(dist)


def test_symmetric_rates_give_uniform():
    params = {k: 1 for k in ("alpha", "beta", "gamma", "delta", "t")}
    dist = stationary_exact(build_generator(2, 0, params))
    assert set(dist.probs.values()) == {Fraction(1, 4)}


def test_fast_rates_are_uniformized():
    params = {"alpha": 3, "beta": 3, "gamma": 3, "delta": 3, "t": Fraction(1, 2)}
    sector = build_generator(1, 0, params)
    assert sector.denominator == 6
    assert row_sums_exact(sector)
    assert sector.matrix[0, 0] == 0


def test_parse_params(rates):
    assert parse_params("a=1/2,b=1/3,g=1/4,d=1/5,t=1/2") == rates
    assert parse_params("alpha=1/2, β=1/3, c=1/4, delta=1/5, t=1/2") == rates


@pytest.mark.parametrize(
    "text,exc",
    [
        ("a=0,b=1,g=1,d=1,t=1/2", NonpositiveParam),
        ("a=1,b=1,g=1,d=1,t=-1", NonpositiveParam),
        ("a=1,b=1,g=1,d=1", ParamError),
        ("a=1,b=1,g=1,d=1,t=1/2,x=2", ParamError),
        ("a=1,b", ParamError),
        ("a=1/0,b=1,g=1,d=1,t=1/2", ParamError),
    ],
)
def test_bad_params(text, exc):
    with pytest.raises(exc):
        parse_params(text)


def test_sector_is_frozen(rates):
    sector = build_generator(1, 0, rates)
    with pytest.raises(dataclasses.FrozenInstanceError):
        sector.n = 3


def test_reducible_chain():
    P = np.array([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]], dtype=object)
    with pytest.raises(Reducible):
        gth_solve(P)


def test_distribution_exports(rates):
    dist = stationary_exact(build_generator(1, 0, rates))
    assert dist.to_json() == {"b": "6/11", "o": "5/11"}
    series = dist.to_series()
    assert list(series.index) == ["b", "o"]
    assert series["b"] == Fraction(6, 11)


def test_cross_validation_small():
    rep = cross_validate(2, 1, trials=2, seed=0)
    assert rep.passed, rep.failures
    assert len(rep.results) == 6


@pytest.mark.slow
@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_cross_validation_three_sites(r):
    assert cross_validate(3, r, trials=2, seed=1).passed


@pytest.mark.slow
@pytest.mark.parametrize("n, r", [(4, r) for r in range(5)] + [(5, r) for r in range(6)])
def test_cross_validation_four_and_five_sites(n, r):
    rep = cross_validate(n, r, trials=1, seed=2)
    assert rep.passed, rep.failures


def test_sampler_is_seeded(rates):
    sector = build_generator(1, 0, rates)
    a = sample_trajectory(sector, 2000, seed=5)
    b = sample_trajectory(sector, 2000, seed=5)
    assert a.equals(b)
    assert a.sum() == pytest.approx(1.0)


def test_sampler_approaches_exact(rates):
    sector = build_generator(1, 0, rates)
    freq = sample_trajectory(sector, 40000, seed=0)
    assert freq["b"] == pytest.approx(6 / 11, abs=0.03)


def test_sampler_rejects_zero_steps(rates):
    with pytest.raises(ValueError):
        sample_trajectory(build_generator(1, 0, rates), 0, seed=0)
