from fractions import Fraction

import pytest

from conftest import make_rng, random_form, random_fraction
from waring import (
    BinaryForm,
    apolar_generators,
    apply_diffop,
    binomial_view,
    build_catalecticant,
    form_from_binomial,
    kernel,
    kernel_at,
    kernel_uniqueness_check,
    parse_form,
    resultant_forms,
)

QUINTIC = parse_form("-15*x^5 + 90*x^4*y - 30*x^3*y^2 + 60*x^2*y^3 + 3*y^5")
SEPTIC = parse_form("3*x^7 + 210*x^4*y^3 + 84*x*y^6")


def test_binomial_view_quintic():
    # independent recomputation: divide the plain coefficients by C(5, i)
    import math

    expected = tuple(
        c / math.comb(5, i) for i, c in enumerate((-15, 90, -30, 60, 0, 3))
    )
    view = binomial_view(QUINTIC)
    assert view.a == expected == (-15, 18, -3, 6, 0, 3)
    assert form_from_binomial(view) == QUINTIC


def test_binomial_view_power_and_family():
    assert binomial_view(parse_form("x^6")).a == (1, 0, 0, 0, 0, 0, 0)
    # 6 / C(4,2) = 1: the even family with unit middle coefficient
    assert binomial_view(parse_form("x^4 + 6*x^2*y^2 + y^4")).a == (1, 0, 1, 0, 1)


def test_catalecticant_quintic_r3():
    cat = build_catalecticant(QUINTIC, 3)
    assert cat.shape == (3, 4)
    assert cat.matrix == (
        (-15, 18, -3, 6),
        (18, -3, 6, 0),
        (-3, 6, 0, 3),
    )


def test_catalecticant_power_r1():
    cat = build_catalecticant(parse_form("x^4"), 1)
    kb = kernel(cat)
    assert kb.dim == 1
    assert kb.basis[0] == parse_form("y")


def test_catalecticant_range_errors():
    with pytest.raises(ValueError):
        build_catalecticant(QUINTIC, 0)
    with pytest.raises(ValueError):
        build_catalecticant(QUINTIC, 6)


def test_kernel_quintic():
    assert kernel_at(QUINTIC, 2).dim == 0
    kb = kernel_at(QUINTIC, 3)
    assert kb.dim == 1
    assert kb.basis[0] == parse_form("x^3 - 3*x*y^2 + y^3")


def test_kernel_septic():
    assert kernel_at(SEPTIC, 2).dim == 0
    kb = kernel_at(SEPTIC, 3)
    assert kb.dim == 1
    # proportional to y^3 - 2 x^3
    h = kb.basis[0]
    assert h * Fraction(-2) == parse_form("y^3 - 2*x^3")


def test_apply_diffop_examples():
    assert apply_diffop(parse_form("y"), parse_form("x^5")).is_zero()
    assert apply_diffop(parse_form("x^3 - 3*x*y^2 + y^3"), QUINTIC).is_zero()
    assert apply_diffop(parse_form("x"), parse_form("x^2")) == parse_form("2*x")
    with pytest.raises(ValueError):
        apply_diffop(parse_form("x^3"), parse_form("x^2"))


def test_apply_diffop_bilinear():
    rng = make_rng(55)
    for _ in range(40):
        p = random_form(rng, 6)
        h1 = random_form(rng, 2)
        h2 = random_form(rng, 2)
        a, b = random_fraction(rng), random_fraction(rng)
        left = apply_diffop(a * h1 + b * h2, p)
        right = a * apply_diffop(h1, p) + b * apply_diffop(h2, p)
        assert left == right


def test_kernel_members_annihilate_and_conversely():
    rng = make_rng(56)
    for _ in range(30):
        d = rng.randint(3, 9)
        f = random_form(rng, d)
        r = rng.randint(1, d)
        kb = kernel_at(f, r)
        for h in kb.basis:
            assert apply_diffop(h, f).is_zero()
        if kb.dim >= 2:
            combo = BinaryForm.zero(r)
            for h in kb.basis:
                combo = combo + random_fraction(rng) * h
            if not combo.is_zero():
                assert apply_diffop(combo, f).is_zero()


def test_hankel_nesting():
    rng = make_rng(57)
    x, y = parse_form("x"), parse_form("y")
    for _ in range(30):
        d = rng.randint(3, 8)
        f = random_form(rng, d)
        for r in range(1, d):
            kb = kernel_at(f, r)
            for h in kb.basis:
                assert apply_diffop(x * h, f).is_zero()
                assert apply_diffop(y * h, f).is_zero()


def test_kernel_dimension_bound_below_threshold():
    rng = make_rng(58)
    for _ in range(60):
        d = rng.randint(3, 10)
        f = random_form(rng, d)
        for r in range(1, (d + 2) // 2 + ((d + 2) % 2) - 1):
            if 2 * r < d + 2:
                assert kernel_at(f, r).dim <= 1


def test_apolar_generators_power():
    pair = apolar_generators(parse_form("x^4"))
    assert pair.g1 == parse_form("y")
    assert pair.g2 == parse_form("x^5")
    assert pair.resultant() != 0


def test_apolar_generators_monomial():
    pair = apolar_generators(parse_form("x^2*y^2"))
    assert pair.degrees == (3, 3)
    assert pair.resultant() != 0


def test_apolar_generators_quintic():
    pair = apolar_generators(QUINTIC)
    assert pair.degrees == (3, 4)
    assert pair.g1 == parse_form("x^3 - 3*x*y^2 + y^3")
    assert pair.resultant() != 0
    assert pair.g1.divide_exact(pair.g2) is None or pair.g2.divide_exact(pair.g1) is None


def test_apolar_generators_random():
    rng = make_rng(59)
    for _ in range(60):
        d = rng.randint(2, 10)
        f = random_form(rng, d)
        pair = apolar_generators(f)
        assert sum(pair.degrees) == d + 2
        assert pair.resultant() != 0
        if pair.g2.degree <= d:
            assert apply_diffop(pair.g2, f).is_zero()
        assert apply_diffop(pair.g1, f).is_zero()


def test_kernel_uniqueness_check():
    assert kernel_uniqueness_check(QUINTIC, 2).status == "empty"
    rep = kernel_uniqueness_check(QUINTIC, 3)
    assert rep.status == "unique"
    assert rep.h == parse_form("x^3 - 3*x*y^2 + y^3")
    with pytest.raises(ValueError):
        kernel_uniqueness_check(QUINTIC, 4)  # 4 >= (5+2)/2


def test_kernel_uniqueness_random_degree_nine():
    rng = make_rng(60)
    for _ in range(25):
        f = random_form(rng, 9)
        rep = kernel_uniqueness_check(f, 4)
        assert rep.dim <= 1


def test_kernel_uniqueness_flags_powers():
    rep = kernel_uniqueness_check(parse_form("x^6"), 3)
    assert rep.status == "high_dim" and rep.dim == 3


def test_resultant_detects_infinity_roots():
    assert resultant_forms(parse_form("y"), parse_form("x*y")) == 0
    assert resultant_forms(parse_form("y"), parse_form("x^2")) != 0
    assert resultant_forms(parse_form("x - y"), parse_form("x + y")) != 0
