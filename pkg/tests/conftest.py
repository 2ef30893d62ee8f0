from fractions import Fraction

import pytest

from app.exactalg import Scalar


@pytest.fixture
def g():
    """Parameter generators by name: g['alpha'], g['t'], ..."""
    names = ("a", "b", "c", "d", "q", "t", "alpha", "beta", "gamma", "delta")
    return {name: Scalar.gen(name) for name in names}


@pytest.fixture
def rates():
    return {
        "alpha": Fraction(1, 2),
        "beta": Fraction(1, 3),
        "gamma": Fraction(1, 4),
        "delta": Fraction(1, 5),
        "t": Fraction(1, 2),
    }
