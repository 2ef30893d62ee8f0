"""Worked values that every build must reproduce."""

from __future__ import annotations

from typing import Dict, Tuple

from ..exactalg import Scalar, parse_scalar
from ..reporting import VerificationReport
from .diagram import build_diagram
from .genpoly import gen_R, gen_Rtilde
from .tableau import Tableau, enumerate_tableaux, weight_exponents
from .word import parse_word

# A filled tableau of type •∗○∗••○, letters keyed by tile centre.
SEVEN_SITE_WORD = "bsosbbo"
SEVEN_SITE_FILLING: Dict[Tuple[float, float], str] = {
    (-0.5, -0.5): "alpha",
    (-2.5, -2.5): "gamma",
    (-3.0, -0.5): "gamma",
    (-4.5, -3.5): "beta",
    (-4.5, -4.5): "delta",
    (-5.0, -1.5): "alpha",
    (-5.5, -5.5): "delta",
    (-6.5, -6.5): "gamma",
    (-1.5, -1.0): "beta",
}
# alpha^2 beta^2 gamma^3 delta^2 t^14
SEVEN_SITE_WEIGHT = (2, 2, 3, 2, 14)

EXPECTED_R = {
    "bb": "alpha*delta*(1 + t + alpha + beta + gamma + delta) + alpha^2*t + delta^2",
    "os": "beta*t^2 + gamma*t + beta*gamma*t + gamma*delta",
    "b": "alpha + delta",
}
EXPECTED_RTILDE = {
    "b": "(t - 1)*(alpha + delta)/(alpha*beta - gamma*delta)",
    "os": "(t - 1)*(beta*t^2 + gamma*t + gamma*beta*t + delta*gamma)/(alpha*beta*t^2 - gamma*delta)",
}
EXPECTED_COUNTS = {"bb": 8, "os": 4, "ss": 1}


def seven_site_tableau() -> Tableau:
    diagram = build_diagram(parse_word(SEVEN_SITE_WORD))
    content = [None] * len(diagram.tiles)
    for (x, y), letter in SEVEN_SITE_FILLING.items():
        content[diagram.tile_at(x, y).id] = letter
    return Tableau(diagram, tuple(content))


def verify_reference_values() -> VerificationReport:
    rep = VerificationReport("tableaux")
    for word, count in EXPECTED_COUNTS.items():
        got = len(enumerate_tableaux(parse_word(word)))
        rep.check(f"{word} has {count} tableaux", got == count, f"got {got}")
    for word, text in EXPECTED_R.items():
        got = gen_R(parse_word(word)).value
        rep.check(f"R({word})", got == parse_scalar(text), f"got {got}")
    for word, text in EXPECTED_RTILDE.items():
        got = gen_Rtilde(parse_word(word))
        rep.check(f"R~({word})", got == parse_scalar(text), f"got {got}")
    for r in range(6):
        rep.check(f"R~(s^{r}) = 1", gen_Rtilde(parse_word("s" * r)) == Scalar(1))
    got = weight_exponents(seven_site_tableau())
    rep.check("seven-site tableau weight", got == SEVEN_SITE_WEIGHT, f"got {got}")
    return rep
