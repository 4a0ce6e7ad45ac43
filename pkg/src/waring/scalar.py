"""Exact coefficient arithmetic for the engine.

Four scalar kinds are supported:

* ``Rational`` -- arbitrary-precision rationals (``fractions.Fraction``),
* ``QuadExt`` -- elements ``a + b*sqrt(m)`` of a single quadratic extension,
* ``TowerScalar`` -- elements of a height-2 tower ``Q(sqrt(m1), sqrt(m2))``,
* ``BigApprox`` -- big floats carrying a conservative error bound.

The first three are exact fields; ``BigApprox`` is the numeric fallback used
when a decomposition lives outside every quadratic tower.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import mpmath

Rational = Fraction

DEFAULT_PRECISION = 256


class DomainError(ValueError):
    """Mismatched radicands or an impossible field embedding."""


class InternalInvariantError(RuntimeError):
    """A condition the engine guarantees internally failed to hold."""


# ---------------------------------------------------------------------------
# integer helpers: primality, factorization, square-free parts
# ---------------------------------------------------------------------------

_SMALL_PRIMES: tuple[int, ...] = ()


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(flags[p * p :: p]))
    return tuple(i for i, f in enumerate(flags) if f)


_SMALL_PRIMES = _sieve(10_000)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24 with these witnesses
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    if n % 2 == 0:
        return 2
    x0 = 2
    c = 1
    while True:
        x = y = x0
        d = 1
        q = 1
        m = 128
        r = 1
        while d == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and d == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                d = math.gcd(q, n)
                k += m
            r *= 2
        if d == n:
            d = 1
            y = ys
            while d == 1:
                y = (y * y + c) % n
                d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` as an exponent map."""
    n = abs(n)
    if n <= 1:
        return {}
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _pollard_brent(m)
        stack.extend((d, m // d))
    return out


def square_free_part(n: int) -> int:
    """Largest square-free divisor class of ``n`` (sign preserved)."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorize(n).items():
        if e % 2:
            out *= p
    return sign * out


@dataclass(frozen=True)
class SquareTest:
    """Outcome of testing whether a rational is a square in Q."""

    is_square: bool
    root: Fraction | None
    radicand: int | None  # square-free m with sqrt(x) in Q(sqrt(m)) otherwise


def is_square_in_q(x: Fraction | int) -> SquareTest:
    """Decide squareness of ``x`` in Q.

    Returns the exact nonnegative square root on success, and otherwise the
    square-free part ``m`` of numerator*denominator, so that
    ``sqrt(x)`` lies in ``Q(sqrt(m))`` (``m < 0`` records a negative input).
    """
    x = Fraction(x)
    if x == 0:
        return SquareTest(True, Fraction(0), None)
    p, q = x.numerator, x.denominator
    if x > 0:
        rp, rq = math.isqrt(p), math.isqrt(q)
        if rp * rp == p and rq * rq == q:
            return SquareTest(True, Fraction(rp, rq), None)
    return SquareTest(False, None, square_free_part(p * q))


def sqrt_rational(x: Fraction | int) -> "Scalar":
    """Exact square root of a rational, as a Fraction or a QuadExt."""
    x = Fraction(x)
    test = is_square_in_q(x)
    if test.is_square:
        return test.root
    m = test.radicand
    # x = p/q, p*q = t^2 * m, sqrt(x) = (t/q) sqrt(m)
    t = math.isqrt(abs(x.numerator * x.denominator) // abs(m))
    return QuadExt(Fraction(0), Fraction(t, x.denominator), m)


# ---------------------------------------------------------------------------
# quadratic extension Q(sqrt(m))
# ---------------------------------------------------------------------------


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected rational, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadExt:
    """``a + b*sqrt(m)`` with ``m`` a square-free integer, ``m not in {0, 1}``."""

    a: Fraction
    b: Fraction
    m: int

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))
        if self.m in (0, 1) or square_free_part(self.m) != self.m:
            raise DomainError(f"radicand must be square-free and not 0 or 1: {self.m}")

    # -- coercion ---------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadExt(_as_fraction(other), Fraction(0), self.m)
        if isinstance(other, QuadExt):
            if other.m != self.m and other.b != 0 and self.b != 0:
                raise DomainError(f"radicand mismatch: sqrt({self.m}) vs sqrt({other.m})")
            if other.m != self.m:
                # one side is actually rational; move it into this radicand
                if other.b == 0:
                    return QuadExt(other.a, Fraction(0), self.m)
                return None  # self rational: caller re-lifts into other.m
            return other
        return None

    def __add__(self, other):
        if isinstance(other, TowerScalar):
            return NotImplemented
        lifted = self._lift(other)
        if lifted is None:
            if isinstance(other, QuadExt):
                return QuadExt(self.a, Fraction(0), other.m) + other
            return NotImplemented
        return QuadExt(self.a + lifted.a, self.b + lifted.b, self.m)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.m)

    def __sub__(self, other):
        if isinstance(other, TowerScalar):
            return NotImplemented
        return self + (-other if isinstance(other, (int, Fraction, QuadExt)) else other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TowerScalar):
            return NotImplemented
        lifted = self._lift(other)
        if lifted is None:
            if isinstance(other, QuadExt):
                return QuadExt(self.a, Fraction(0), other.m) * other
            return NotImplemented
        return QuadExt(
            self.a * lifted.a + self.m * self.b * lifted.b,
            self.a * lifted.b + self.b * lifted.a,
            self.m,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        return QuadExt(self.a / n, -self.b / n, self.m)

    def __truediv__(self, other):
        if isinstance(other, TowerScalar):
            return NotImplemented
        lifted = self._lift(other)
        if lifted is None:
            if isinstance(other, QuadExt):
                return QuadExt(self.a, Fraction(0), other.m) / other
            return NotImplemented
        return self * lifted.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExt(Fraction(1), Fraction(0), self.m)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            if self.m == other.m:
                return self.a == other.a and self.b == other.b
            return self.b == 0 and other.b == 0 and self.a == other.a
        if isinstance(other, TowerScalar):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    # -- structure --------------------------------------------------------

    def conjugate(self) -> "QuadExt":
        """``a + b*sqrt(m) -> a - b*sqrt(m)``."""
        return QuadExt(self.a, -self.b, self.m)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - m*b^2``; multiplicative."""
        return self.a * self.a - self.m * self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Sign under the real embedding sending sqrt(m) to the positive root."""
        if self.m < 0:
            raise DomainError(f"Q(sqrt({self.m})) has no real embedding")
        if self.b == 0:
            return _sign_fraction(self.a)
        if self.a == 0:
            return _sign_fraction(self.b)
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        # opposite signs: compare a^2 with m b^2
        cmp = self.a * self.a - self.m * self.b * self.b
        return _sign_fraction(self.a) * _sign_fraction(cmp)

    def approx(self, prec: int = DEFAULT_PRECISION) -> "BigApprox":
        return (
            BigApprox.from_fraction(self.a, prec)
            + BigApprox.from_fraction(self.b, prec) * BigApprox.sqrt_int(self.m, prec)
        )

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.m})"

    def __str__(self):
        return scalar_text(self)


def quadext(a, b, m: int) -> "Scalar":
    """Build ``a + b*sqrt(m)`` normalizing the radicand to square-free form.

    Square factors of ``m`` move into the rational coefficient; a perfect
    square radicand collapses the value to a plain Fraction.
    """
    a, b = _as_fraction(a), _as_fraction(b)
    if m == 0:
        raise DomainError("radicand must be nonzero")
    sf = square_free_part(m)
    s = math.isqrt(m // sf) if sf != 0 else 0
    if sf == 1:
        return a + b * s
    return QuadExt(a, b * s, sf)


def conjugate(x: "Scalar") -> "Scalar":
    """Quadratic conjugation; rationals are self-conjugate."""
    if isinstance(x, QuadExt):
        return x.conjugate()
    if isinstance(x, (int, Fraction)):
        return _as_fraction(x)
    raise TypeError("conjugate() expects a rational or QuadExt; use conj_wrt on towers")


def _sign_fraction(x: Fraction) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# height-2 tower Q(sqrt(m1), sqrt(m2))
# ---------------------------------------------------------------------------


def _tower_triple(m1: int, m2: int) -> tuple[int, int, int]:
    m3 = square_free_part(m1 * m2)
    return (m1, m2, m3)


def _canonical_pair(m1: int, m2: int) -> tuple[int, int]:
    triple = sorted(set(_tower_triple(m1, m2)))
    if len(triple) != 3:
        raise DomainError(f"degenerate tower radicands ({m1}, {m2})")
    return triple[0], triple[1]


@dataclass(frozen=True)
class TowerScalar:
    """``c00 + c10*sqrt(m1) + c01*sqrt(m2) + c11*sqrt(m3)`` with ``m3`` the
    square-free part of ``m1*m2``; radicands stored in canonical sorted order."""

    coords: tuple[Fraction, Fraction, Fraction, Fraction]
    m1: int
    m2: int

    def __post_init__(self):
        if self.m1 in (0, 1) or self.m2 in (0, 1) or self.m1 == self.m2:
            raise DomainError(f"invalid tower radicands ({self.m1}, {self.m2})")
        for m in (self.m1, self.m2):
            if square_free_part(m) != m:
                raise DomainError(f"tower radicand not square-free: {m}")
        object.__setattr__(self, "coords", tuple(_as_fraction(c) for c in self.coords))
        if (self.m1, self.m2) != _canonical_pair(self.m1, self.m2):
            raise DomainError(
                f"non-canonical tower radicands ({self.m1}, {self.m2}); use tower_scalar()"
            )

    # -- derived radicand data ---------------------------------------------

    @property
    def m3(self) -> int:
        return square_free_part(self.m1 * self.m2)

    def _mul_table(self) -> tuple[int, int, int]:
        g = math.gcd(self.m1, self.m2) if self.m1 * self.m2 > 0 else math.gcd(abs(self.m1), abs(self.m2))
        # sqrt(m1)sqrt(m2) = g'*sqrt(m3) with g' = isqrt(m1*m2/m3)
        g12 = math.isqrt(self.m1 * self.m2 // self.m3)
        g13 = math.isqrt(self.m1 * self.m3 // self.m2)
        g23 = math.isqrt(self.m2 * self.m3 // self.m1)
        return g12, g13, g23

    # -- coercion -----------------------------------------------------------

    def _lift(self, other) -> "TowerScalar | None":
        if isinstance(other, (int, Fraction)):
            return TowerScalar(
                (_as_fraction(other), Fraction(0), Fraction(0), Fraction(0)), self.m1, self.m2
            )
        if isinstance(other, QuadExt):
            slot = {self.m1: 1, self.m2: 2, self.m3: 3}.get(other.m)
            if slot is None:
                if other.b == 0:
                    return self._lift(other.a)
                raise DomainError(
                    f"sqrt({other.m}) does not embed in Q(sqrt({self.m1}), sqrt({self.m2}))"
                )
            coords = [other.a, Fraction(0), Fraction(0), Fraction(0)]
            coords[slot] = other.b
            return TowerScalar(tuple(coords), self.m1, self.m2)
        if isinstance(other, TowerScalar):
            if (other.m1, other.m2) == (self.m1, self.m2):
                return other
            if set(_tower_triple(other.m1, other.m2)) == set(_tower_triple(self.m1, self.m2)):
                return tower_scalar(
                    {1: other.coords[0], other.m1: other.coords[1], other.m2: other.coords[2], other.m3: other.coords[3]},
                    (self.m1, self.m2),
                )
            raise DomainError("towers over different radicand sets cannot mix")
        return None

    def __add__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return TowerScalar(
            tuple(a + b for a, b in zip(self.coords, lifted.coords)), self.m1, self.m2
        )

    __radd__ = __add__

    def __neg__(self):
        return TowerScalar(tuple(-c for c in self.coords), self.m1, self.m2)

    def __sub__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self + (-lifted)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        u0, u1, u2, u3 = self.coords
        v0, v1, v2, v3 = lifted.coords
        m1, m2, m3 = self.m1, self.m2, self.m3
        g12, g13, g23 = self._mul_table()
        c0 = u0 * v0 + m1 * u1 * v1 + m2 * u2 * v2 + m3 * u3 * v3
        c1 = u0 * v1 + u1 * v0 + g23 * (u2 * v3 + u3 * v2)
        c2 = u0 * v2 + u2 * v0 + g13 * (u1 * v3 + u3 * v1)
        c3 = u0 * v3 + u3 * v0 + g12 * (u1 * v2 + u2 * v1)
        return TowerScalar((c0, c1, c2, c3), m1, m2)

    __rmul__ = __mul__

    def conj_wrt(self, m: int) -> "TowerScalar":
        """Conjugation negating every component containing ``sqrt(m)``."""
        c0, c1, c2, c3 = self.coords
        if m == self.m1:
            return TowerScalar((c0, -c1, c2, -c3), self.m1, self.m2)
        if m == self.m2:
            return TowerScalar((c0, c1, -c2, -c3), self.m1, self.m2)
        if m == self.m3:
            return TowerScalar((c0, -c1, -c2, c3), self.m1, self.m2)
        raise DomainError(f"sqrt({m}) is not a radical of this tower")

    def inverse(self) -> "TowerScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in quadratic tower")
        conj = self.conj_wrt(self.m2)
        y = self * conj  # lies in Q(sqrt(m1))
        y0, y1 = y.coords[0], y.coords[1]
        n = y0 * y0 - self.m1 * y1 * y1
        if n == 0:
            raise InternalInvariantError("tower norm vanished on a nonzero element")
        ybar = TowerScalar((y0 / n, -y1 / n, Fraction(0), Fraction(0)), self.m1, self.m2)
        return conj * ybar

    def __truediv__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self * lifted.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = TowerScalar((Fraction(1), Fraction(0), Fraction(0), Fraction(0)), self.m1, self.m2)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coords[1] == self.coords[2] == self.coords[3] == 0 and self.coords[0] == other
        if isinstance(other, QuadExt):
            try:
                return self == self._lift(other)
            except DomainError:
                return False
        if isinstance(other, TowerScalar):
            try:
                return self.coords == self._lift(other).coords
            except DomainError:
                return False
        return NotImplemented

    def __hash__(self):
        c0, c1, c2, c3 = self.coords
        if c1 == c2 == c3 == 0:
            return hash(c0)
        if c2 == c3 == 0:
            return hash((c0, c1, self.m1))
        if c1 == c3 == 0:
            return hash((c0, c2, self.m2))
        if c1 == c2 == 0:
            return hash((c0, c3, self.m3))
        return hash((self.coords, self.m1, self.m2))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def as_quadext(self) -> "Scalar | None":
        """Demote to a QuadExt or Fraction when a radical is unused."""
        c0, c1, c2, c3 = self.coords
        if c1 == c2 == c3 == 0:
            return c0
        if c2 == c3 == 0:
            return QuadExt(c0, c1, self.m1)
        if c1 == c3 == 0:
            return QuadExt(c0, c2, self.m2)
        if c1 == c2 == 0:
            return QuadExt(c0, c3, self.m3)
        return None

    def approx(self, prec: int = DEFAULT_PRECISION) -> "BigApprox":
        c0, c1, c2, c3 = self.coords
        out = BigApprox.from_fraction(c0, prec)
        for c, m in ((c1, self.m1), (c2, self.m2), (c3, self.m3)):
            out = out + BigApprox.from_fraction(c, prec) * BigApprox.sqrt_int(m, prec)
        return out

    def __repr__(self):
        return f"TowerScalar({self.coords!r}, {self.m1}, {self.m2})"

    def __str__(self):
        return scalar_text(self)


def tower_scalar(coords, radicands: tuple[int, int]) -> TowerScalar:
    """Build a tower element from either a coordinate 4-tuple or a mapping
    keyed by radicand (``1`` for the rational part), canonicalizing radicands."""
    m1, m2 = radicands
    cm1, cm2 = _canonical_pair(m1, m2)
    if isinstance(coords, dict):
        mapping = dict(coords)
    else:
        c = tuple(coords)
        mapping = {1: c[0], m1: c[1], m2: c[2], square_free_part(m1 * m2): c[3]}
    m3 = square_free_part(cm1 * cm2)
    out = [Fraction(0)] * 4
    for key, val in mapping.items():
        slot = {1: 0, cm1: 1, cm2: 2, m3: 3}.get(key)
        if slot is None:
            raise DomainError(f"radicand {key} outside tower ({cm1}, {cm2})")
        out[slot] = _as_fraction(val)
    return TowerScalar(tuple(out), cm1, cm2)


# ---------------------------------------------------------------------------
# big floats with tracked error bounds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BigApprox:
    """A floating value with a conservative bound on its distance from the
    true quantity: the truth lies within ``value +- err`` (disc in C)."""

    value: object  # mpmath.mpf or mpmath.mpc
    err: object  # mpmath.mpf, nonnegative
    prec: int = DEFAULT_PRECISION

    @staticmethod
    def _slack(value, prec):
        return (abs(value) + mpmath.mpf(1)) * mpmath.mpf(2) ** (-(prec + 10))

    @classmethod
    def exact(cls, value, prec: int = DEFAULT_PRECISION) -> "BigApprox":
        with mpmath.workprec(prec + 20):
            v = mpmath.mpmathify(value)
            return cls(v, mpmath.mpf(0), prec)

    @classmethod
    def from_fraction(cls, q, prec: int = DEFAULT_PRECISION) -> "BigApprox":
        q = Fraction(q)
        with mpmath.workprec(prec + 20):
            v = mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator)
            return cls(v, cls._slack(v, prec), prec)

    @classmethod
    def sqrt_int(cls, m: int, prec: int = DEFAULT_PRECISION) -> "BigApprox":
        with mpmath.workprec(prec + 20):
            if m >= 0:
                v = mpmath.sqrt(mpmath.mpf(m))
            else:
                v = mpmath.mpc(0, mpmath.sqrt(mpmath.mpf(-m)))
            return cls(v, cls._slack(v, prec), prec)

    @classmethod
    def from_scalar(cls, s, prec: int = DEFAULT_PRECISION) -> "BigApprox":
        if isinstance(s, BigApprox):
            return s
        if isinstance(s, (int, Fraction)):
            return cls.from_fraction(s, prec)
        if isinstance(s, (QuadExt, TowerScalar)):
            return s.approx(prec)
        with mpmath.workprec(prec + 20):
            return cls(mpmath.mpmathify(s), cls._slack(mpmath.mpmathify(s), prec), prec)

    def _pair(self, other) -> "tuple[BigApprox, BigApprox]":
        if not isinstance(other, BigApprox):
            other = BigApprox.from_scalar(other, self.prec)
        return self, other

    def __add__(self, other):
        a, b = self._pair(other)
        prec = min(a.prec, b.prec)
        with mpmath.workprec(prec + 20):
            v = a.value + b.value
            return BigApprox(v, a.err + b.err + self._slack(v, prec), prec)

    __radd__ = __add__

    def __neg__(self):
        return BigApprox(-self.value, self.err, self.prec)

    def __sub__(self, other):
        a, b = self._pair(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        prec = min(a.prec, b.prec)
        with mpmath.workprec(prec + 20):
            v = a.value * b.value
            err = abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err
            return BigApprox(v, err + self._slack(v, prec), prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._pair(other)
        prec = min(a.prec, b.prec)
        with mpmath.workprec(prec + 20):
            denom = abs(b.value) - b.err
            if denom <= 0:
                raise ZeroDivisionError("divisor interval contains zero")
            v = a.value / b.value
            err = (a.err + abs(v) * b.err) / denom
            return BigApprox(v, err + self._slack(v, prec), prec)

    def __rtruediv__(self, other):
        a, b = self._pair(other)
        return b / a

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers unsupported; divide explicitly")
        out = BigApprox.exact(1, self.prec)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __abs__(self):
        return BigApprox(abs(self.value), self.err, self.prec)

    def magnitude_bound(self):
        """Upper bound on ``|true value|``."""
        with mpmath.workprec(self.prec + 20):
            return abs(self.value) + self.err

    def contains(self, exact, check_prec: int = 1024) -> bool:
        """Whether the exact scalar provably lies in this interval."""
        ref = BigApprox.from_scalar(exact, check_prec)
        with mpmath.workprec(check_prec + 20):
            return abs(ref.value - self.value) <= self.err + ref.err

    def __str__(self):
        return scalar_text(self)


# ---------------------------------------------------------------------------
# scalar domains and generic helpers
# ---------------------------------------------------------------------------

Scalar = Union[Fraction, QuadExt, TowerScalar]


@dataclass(frozen=True)
class Domain:
    """Tag for the exact coefficient field of a form."""

    kind: str  # "QQ" | "quad" | "tower"
    radicands: tuple[int, ...] = ()

    def __str__(self):
        if self.kind == "QQ":
            return "Q"
        if self.kind == "quad":
            return f"Q(sqrt({self.radicands[0]}))"
        return f"Q(sqrt({self.radicands[0]}), sqrt({self.radicands[1]}))"


QQ = Domain("QQ")


def quad_domain(m: int) -> Domain:
    sf = square_free_part(m)
    if sf in (0, 1):
        raise DomainError(f"invalid quadratic radicand {m}")
    return Domain("quad", (sf,))


def tower_domain(m1: int, m2: int) -> Domain:
    return Domain("tower", _canonical_pair(m1, m2))


def domain_of_scalar(s: Scalar) -> Domain:
    if isinstance(s, (int, Fraction)):
        return QQ
    if isinstance(s, QuadExt):
        return QQ if s.b == 0 else Domain("quad", (s.m,))
    if isinstance(s, TowerScalar):
        return Domain("tower", (s.m1, s.m2))
    raise TypeError(f"not an exact scalar: {type(s).__name__}")


def join_domains(d1: Domain, d2: Domain) -> Domain:
    if d1 == d2:
        return d1
    if d1.kind == "QQ":
        return d2
    if d2.kind == "QQ":
        return d1
    if d1.kind == "quad" and d2.kind == "quad":
        if d1.radicands == d2.radicands:
            return d1
        return tower_domain(d1.radicands[0], d2.radicands[0])
    if d1.kind == "tower" and d2.kind == "quad":
        d1, d2 = d2, d1
    if d1.kind == "quad" and d2.kind == "tower":
        m = d1.radicands[0]
        if m in set(_tower_triple(*d2.radicands)):
            return d2
        raise DomainError(f"sqrt({m}) does not embed in {d2} (tower height cap is 2)")
    if d1.kind == "tower" and d2.kind == "tower":
        if set(_tower_triple(*d1.radicands)) == set(_tower_triple(*d2.radicands)):
            return d1
        raise DomainError(f"cannot join {d1} with {d2} (tower height cap is 2)")
    raise DomainError(f"cannot join {d1} with {d2}")


def embed(s: Scalar, dom: Domain) -> Scalar:
    """Re-express ``s`` in the (at least as large) domain ``dom``."""
    if dom.kind == "QQ":
        if isinstance(s, (int, Fraction)):
            return _as_fraction(s)
        if isinstance(s, QuadExt) and s.b == 0:
            return s.a
        if isinstance(s, TowerScalar):
            demoted = s.as_quadext()
            if isinstance(demoted, Fraction):
                return demoted
        raise DomainError(f"{s} is not rational")
    if dom.kind == "quad":
        m = dom.radicands[0]
        if isinstance(s, (int, Fraction)):
            return QuadExt(_as_fraction(s), Fraction(0), m)
        if isinstance(s, QuadExt):
            if s.m == m or s.b == 0:
                return QuadExt(s.a, s.b if s.m == m else Fraction(0), m)
            raise DomainError(f"sqrt({s.m}) does not embed in Q(sqrt({m}))")
        if isinstance(s, TowerScalar):
            demoted = s.as_quadext()
            if demoted is not None:
                return embed(demoted, dom)
        raise DomainError(f"{s} does not embed in {dom}")
    m1, m2 = dom.radicands
    zero = TowerScalar((Fraction(0),) * 4, m1, m2)
    lifted = zero._lift(s if not isinstance(s, int) else Fraction(s))
    if lifted is None:
        raise DomainError(f"{s} does not embed in {dom}")
    return lifted


def is_zero(s) -> bool:
    if isinstance(s, (int, Fraction)):
        return s == 0
    if isinstance(s, (QuadExt, TowerScalar)):
        return s.is_zero()
    raise TypeError(f"not an exact scalar: {type(s).__name__}")


def sign(s) -> int:
    """Sign under the real embedding (sqrt radicands map to positive roots)."""
    if isinstance(s, (int, Fraction)):
        return (s > 0) - (s < 0)
    if isinstance(s, QuadExt):
        return s.sign()
    raise DomainError("sign is only defined for rationals and real QuadExt scalars")


def rational_content(scalars: Iterable[Scalar]) -> Fraction:
    """Positive rational gcd of all rational coordinates appearing in
    ``scalars``; used to clear content without changing signs."""
    nums: list[int] = []
    dens: list[int] = []

    def eat(q: Fraction):
        if q != 0:
            nums.append(abs(q.numerator))
            dens.append(q.denominator)

    for s in scalars:
        if isinstance(s, (int, Fraction)):
            eat(_as_fraction(s))
        elif isinstance(s, QuadExt):
            eat(s.a)
            eat(s.b)
        elif isinstance(s, TowerScalar):
            for c in s.coords:
                eat(c)
        else:
            raise TypeError(f"not an exact scalar: {type(s).__name__}")
    if not nums:
        return Fraction(1)
    g = 0
    for n in nums:
        g = math.gcd(g, n)
    l = 1
    for d in dens:
        l = l * d // math.gcd(l, d)
    return Fraction(g, l)


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------


def _fraction_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _radical_terms(pairs: list[tuple[Fraction, int | None]]) -> str:
    # pairs of (coefficient, radicand-or-None for the rational part)
    parts: list[str] = []
    for coeff, rad in pairs:
        if coeff == 0:
            continue
        mag = abs(coeff)
        if rad is None:
            body = _fraction_text(mag)
        elif mag == 1:
            body = f"sqrt({rad})"
        else:
            body = f"{_fraction_text(mag)}*sqrt({rad})"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    if not parts:
        return "0"
    return " ".join(parts)


def scalar_text(s) -> str:
    """Canonical text rendering: ``p/q`` and ``a + b*sqrt(m)`` shapes."""
    if isinstance(s, int):
        return str(s)
    if isinstance(s, Fraction):
        return _fraction_text(s)
    if isinstance(s, QuadExt):
        return _radical_terms([(s.a, None), (s.b, s.m)])
    if isinstance(s, TowerScalar):
        c0, c1, c2, c3 = s.coords
        return _radical_terms([(c0, None), (c1, s.m1), (c2, s.m2), (c3, s.m3)])
    if isinstance(s, BigApprox):
        digits = max(6, int(s.prec * 0.301))
        with mpmath.workprec(s.prec + 20):
            v = s.value
            if isinstance(v, mpmath.mpc) and v.imag != 0:
                re = mpmath.nstr(v.real, digits)
                im = mpmath.nstr(abs(v.imag), digits)
                op = "+" if v.imag >= 0 else "-"
                return f"{re} {op} {im}*i"
            real = v.real if isinstance(v, mpmath.mpc) else v
            return mpmath.nstr(real, digits)
    raise TypeError(f"cannot render {type(s).__name__}")
