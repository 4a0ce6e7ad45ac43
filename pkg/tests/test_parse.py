from fractions import Fraction

import pytest

from conftest import make_rng, random_fraction
from waring import BinaryForm, ParseError, QuadExt, parse_form, parse_scalar, render_form
from waring.parse import parse_scalar_or_numeric


def test_parse_plain_quartic():
    f = parse_form("x^4 + 4*x^2*y^2 + y^4")
    assert f.degree == 4
    assert f.coeffs == (1, 0, 4, 0, 1)


def test_parse_quintic_with_gap():
    f = parse_form("-15*x^5 + 90*x^4*y - 30*x^3*y^2 + 60*x^2*y^3 + 3*y^5")
    assert f.degree == 5
    assert f.coeffs == (-15, 90, -30, 60, 0, 3)


def test_parse_quadratic_extension_coefficients():
    f = parse_form("(1 + 2*sqrt(2))*x^5 - 25*x^4*y")
    assert f.degree == 5
    assert f.coeffs[0] == QuadExt(Fraction(1), Fraction(2), 2)
    assert f.coeffs[1] == -25
    assert f.domain.kind == "quad" and f.domain.radicands == (2,)


def test_parse_styles():
    assert parse_form("2x^2y") == parse_form("2*x^2*y")
    assert parse_form("x^2 y") == parse_form("x^2*y")
    assert parse_form("1/2*x^3") == parse_form("(1/2)*x^3")
    assert parse_form("0").is_zero()
    assert parse_form("x^0*y^0").degree == 0


def test_parse_errors_with_position():
    with pytest.raises(ParseError):
        parse_form("x^2 + y")  # non-homogeneous
    with pytest.raises(ParseError):
        parse_form("x^2 +")
    with pytest.raises(ParseError) as err:
        parse_form("x^2 @ y^2")
    assert err.value.position == 4
    with pytest.raises(ParseError):
        parse_form("x^4 - x^4")  # cancels to zero without being written as 0
    with pytest.raises(ParseError):
        parse_form("sqrt(4)*x")  # radicals live inside a parenthesized coefficient
    with pytest.raises(ParseError):
        parse_form("(sqrt(0))*x")


def test_parse_scalar():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("1 + 2*sqrt(2)") == QuadExt(Fraction(1), Fraction(2), 2)
    assert parse_scalar("sqrt(2) + sqrt(3)") * parse_scalar("sqrt(2) - sqrt(3)") == -1
    assert parse_scalar("-sqrt(9)") == -3
    assert parse_scalar("sqrt(-3)") == QuadExt(Fraction(0), Fraction(1), -3)


def test_parse_scalar_or_numeric():
    val = parse_scalar_or_numeric("1.25", 128)
    assert abs(float(val.value) - 1.25) < 1e-12
    val = parse_scalar_or_numeric("-0.5 + 1.25*i", 128)
    assert abs(complex(val.value) - (-0.5 + 1.25j)) < 1e-12
    assert parse_scalar_or_numeric("1/2", 128) == Fraction(1, 2)


def test_render_examples():
    f = parse_form("x^4 + 4*x^2*y^2 + y^4")
    assert render_form(f) == "x^4 + 4*x^2*y^2 + y^4"
    f = parse_form("-x^3 + 1/2*x*y^2 - y^3")
    assert render_form(f) == "-x^3 + 1/2*x*y^2 - y^3"
    f = parse_form("(1 - sqrt(5))*x^2 + y^2")
    assert render_form(f) == "(1 - sqrt(5))*x^2 + y^2"
    assert render_form(BinaryForm.zero(3)) == "0"


def test_round_trip_random_rational_forms():
    rng = make_rng(77)
    for _ in range(500):
        d = rng.randint(1, 12)
        coeffs = [random_fraction(rng, -20, 20, 6) for _ in range(d + 1)]
        if all(c == 0 for c in coeffs):
            coeffs[0] = Fraction(1)
        f = BinaryForm(d, tuple(coeffs))
        assert parse_form(render_form(f)) == f


def test_round_trip_random_quadext_forms():
    rng = make_rng(78)
    for _ in range(120):
        d = rng.randint(1, 8)
        m = rng.choice([2, 3, 5, -1])
        coeffs = [
            QuadExt(random_fraction(rng), random_fraction(rng), m) for _ in range(d + 1)
        ]
        f = BinaryForm(d, tuple(coeffs))
        if f.is_zero():
            continue
        assert parse_form(render_form(f)) == f
