from fractions import Fraction

import pytest

from conftest import make_rng
from waring import (
    BigApprox,
    DomainError,
    QuadExt,
    TowerScalar,
    conjugate,
    is_square_in_q,
    quadext,
    scalar_text,
    sqrt_rational,
    square_free_part,
    tower_scalar,
)


def test_conjugate_product_in_quadratic_extension():
    x = QuadExt(Fraction(1, 2), Fraction(1, 3), 2)
    assert x * x.conjugate() == Fraction(1, 36)


def test_square_of_pure_radical():
    x = QuadExt(Fraction(0), Fraction(1), 3)
    assert x * x == 3


def test_tower_difference_of_squares():
    s2_plus_s3 = tower_scalar({2: 1, 3: 1}, (2, 3))
    s2_minus_s3 = tower_scalar({2: 1, 3: -1}, (2, 3))
    assert s2_plus_s3 * s2_minus_s3 == -1


def test_conjugate_examples():
    assert conjugate(Fraction(5)) == 5
    assert conjugate(QuadExt(Fraction(1), Fraction(1), 5)) == QuadExt(
        Fraction(1), Fraction(-1), 5
    )
    x = QuadExt(Fraction(2), Fraction(-3), 7)
    assert x.conjugate().conjugate() == x
    assert (x * x.conjugate()).b == 0


def test_tower_conjugation_wrt_second_radical():
    v = tower_scalar({2: 1, 3: 1}, (2, 3))
    assert v.conj_wrt(3) == tower_scalar({2: 1, 3: -1}, (2, 3))


def test_is_square_in_q_yes_81():
    # oracle: 81 is the cubic discriminant -4p^3 - 27q^2 at (p, q) = (-3, 1)
    assert -4 * (-3) ** 3 - 27 * 1**2 == 81
    res = is_square_in_q(Fraction(81))
    assert res.is_square and res.root == 9


def test_is_square_in_q_no_cases():
    res = is_square_in_q(Fraction(12))
    assert not res.is_square and res.radicand == 3
    assert is_square_in_q(Fraction(1)).root == 1
    res = is_square_in_q(Fraction(-4))
    assert not res.is_square and res.radicand == -1
    res = is_square_in_q(Fraction(9, 4))
    assert res.is_square and res.root == Fraction(3, 2)


def test_square_free_part():
    assert square_free_part(432) == 3
    assert square_free_part(-108) == -3
    assert square_free_part(1) == 1
    assert square_free_part(30) == 30


def test_sqrt_rational():
    assert sqrt_rational(Fraction(9, 4)) == Fraction(3, 2)
    root = sqrt_rational(Fraction(8))
    assert root == QuadExt(Fraction(0), Fraction(2), 2)
    assert root * root == 8
    root = sqrt_rational(Fraction(1, 3))
    assert root * root == Fraction(1, 3)


def test_radicand_normalization():
    assert quadext(0, 1, 12) == QuadExt(Fraction(0), Fraction(2), 3)
    assert quadext(1, 1, 9) == Fraction(4)
    with pytest.raises(DomainError):
        quadext(1, 1, 0)


def test_mismatched_radicands_rejected():
    a = QuadExt(Fraction(1), Fraction(1), 2)
    b = QuadExt(Fraction(1), Fraction(1), 5)
    with pytest.raises(DomainError):
        a + b
    with pytest.raises(DomainError):
        a * b
    # one side rational in disguise is fine
    c = QuadExt(Fraction(3), Fraction(0), 5)
    assert a + c == QuadExt(Fraction(4), Fraction(1), 2)


def test_division_by_zero():
    a = QuadExt(Fraction(1), Fraction(1), 2)
    with pytest.raises(ZeroDivisionError):
        a / QuadExt(Fraction(0), Fraction(0), 2)
    t = tower_scalar({1: 1}, (2, 3))
    with pytest.raises(ZeroDivisionError):
        t / tower_scalar({1: 0}, (2, 3))


def _random_quadext(rng, m):
    return QuadExt(
        Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
        m,
    )


def _random_tower(rng, rads=(2, 3)):
    return tower_scalar(
        [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(4)], rads
    )


def test_field_axioms_quadext():
    rng = make_rng(101)
    one = QuadExt(Fraction(1), Fraction(0), 2)
    for _ in range(1000):
        a, b, c = (_random_quadext(rng, 2) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == one


def test_field_axioms_tower():
    rng = make_rng(202)
    for _ in range(1000):
        a, b, c = (_random_tower(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == 1


def test_norm_multiplicativity():
    rng = make_rng(303)
    for _ in range(500):
        a, b = _random_quadext(rng, 5), _random_quadext(rng, 5)
        assert (a * b).norm() == a.norm() * b.norm()


def test_quadext_sign_under_real_embedding():
    assert QuadExt(Fraction(-1), Fraction(1), 2).sign() == 1  # sqrt(2) > 1
    assert QuadExt(Fraction(-2), Fraction(1), 2).sign() == -1
    assert QuadExt(Fraction(1), Fraction(-1), 2).sign() == -1
    assert QuadExt(Fraction(2), Fraction(-1), 2).sign() == 1
    with pytest.raises(DomainError):
        QuadExt(Fraction(1), Fraction(1), -3).sign()


def test_big_approx_soundness_on_towers():
    rng = make_rng(404)
    for _ in range(100):
        vals = [_random_tower(rng) for _ in range(4)]
        exact = vals[0] * vals[1] + vals[2]
        approx = (
            vals[0].approx(192) * vals[1].approx(192) + vals[2].approx(192)
        )
        assert approx.contains(exact)
        if not vals[3].is_zero():
            exact2 = exact / vals[3]
            approx2 = approx / vals[3].approx(192)
            assert approx2.contains(exact2)


def test_big_approx_powers_and_intervals():
    a = BigApprox.from_fraction(Fraction(1, 3), 128)
    cubed = a**3
    assert cubed.contains(Fraction(1, 27))
    s = BigApprox.sqrt_int(2, 128)
    assert (s * s).contains(Fraction(2))


def test_scalar_text_renderings():
    assert scalar_text(Fraction(-3, 2)) == "-3/2"
    assert scalar_text(QuadExt(Fraction(1), Fraction(2), 2)) == "1 + 2*sqrt(2)"
    assert scalar_text(QuadExt(Fraction(0), Fraction(-1), 3)) == "-sqrt(3)"
    assert scalar_text(QuadExt(Fraction(1, 2), Fraction(0), 3)) == "1/2"
    v = tower_scalar({1: 1, 2: 1, 3: -1}, (2, 3))
    assert scalar_text(v) == "1 + sqrt(2) - sqrt(3)"


def test_tower_canonicalization_and_embedding():
    # building over (2, 6) lands in the canonical (2, 3) tower
    v = tower_scalar({1: 0, 2: 0, 6: 1, 3: 0}, (2, 6))
    w = tower_scalar({6: 1}, (2, 3))
    assert v == w
    q = QuadExt(Fraction(0), Fraction(1), 6)
    assert v == v * 1 and (v + q) == 2 * w
