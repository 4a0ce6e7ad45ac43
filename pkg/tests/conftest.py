import random
from fractions import Fraction

from waring import BinaryForm


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_fraction(rng, lo=-6, hi=6, max_den=4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def nonzero_fraction(rng, lo=-6, hi=6, max_den=4) -> Fraction:
    while True:
        q = random_fraction(rng, lo, hi, max_den)
        if q != 0:
            return q


def random_form(rng, degree: int) -> BinaryForm:
    while True:
        coeffs = [random_fraction(rng) for _ in range(degree + 1)]
        form = BinaryForm(degree, tuple(coeffs))
        if not form.is_zero():
            return form


def distinct_roots(rng, count: int, lo=-8, hi=8) -> list[Fraction]:
    roots: set[Fraction] = set()
    while len(roots) < count:
        roots.add(Fraction(rng.randint(lo, hi), rng.randint(1, 3)))
    return sorted(roots)


def split_form_from_roots(roots, multiplicities=None, y_power: int = 0) -> BinaryForm:
    """Product of (x - t*y) factors, optionally times a power of y."""
    out = BinaryForm(0, (Fraction(1),))
    multiplicities = multiplicities or [1] * len(roots)
    for t, m in zip(roots, multiplicities):
        out = out * BinaryForm.linear(Fraction(1), -t) ** m
    if y_power:
        out = out * BinaryForm.monomial(y_power, y_power)
    return out


def random_split_form(rng, degree: int) -> tuple[BinaryForm, int]:
    """A product of distinct rational lines (possibly including y); returns
    the form and its number of distinct real projective roots."""
    use_y = rng.random() < 0.3
    n_lines = degree - (1 if use_y else 0)
    roots = distinct_roots(rng, n_lines)
    return split_form_from_roots(roots, y_power=1 if use_y else 0), degree


def random_posdef_quadratic(rng) -> BinaryForm:
    """A positive definite rational quadratic form."""
    a = Fraction(rng.randint(1, 5))
    t = random_fraction(rng, -3, 3)
    s = Fraction(rng.randint(1, 5))
    # a*(x + t*y)^2 + s*y^2
    return a * BinaryForm.linear(Fraction(1), t) ** 2 + BinaryForm(
        2, (Fraction(0), Fraction(0), s)
    )


def random_unimodular(rng) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    while True:
        a, b, c, d = (rng.randint(-4, 4) for _ in range(4))
        if a * d - b * c in (1, -1):
            return Fraction(a), Fraction(b), Fraction(c), Fraction(d)
