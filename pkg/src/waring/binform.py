"""Binary form algebra.

A binary form of degree ``d`` is stored through its plain coefficients
``c_0..c_d`` with ``f = sum c_i x^(d-i) y^i``.  The projective convention is
that roots are points ``(alpha : beta)``; the root at infinity ``(1 : 0)``
corresponds to divisibility by ``y`` and is pulled out explicitly before any
dehomogenization to ``f(x, 1)``.

For coefficients in ``Q(sqrt(m))`` the real embedding always sends
``sqrt(m)`` to the positive real root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .scalar import (
    Domain,
    DomainError,
    QQ,
    QuadExt,
    Scalar,
    Fraction as _Fraction,
    domain_of_scalar,
    embed,
    factorize,
    is_zero,
    join_domains,
    rational_content,
    sign,
    sqrt_rational,
)

__all__ = [
    "BinaryForm",
    "FactorizationShape",
    "gcd_forms",
    "square_free_decompose",
    "real_root_count",
    "is_hyperbolic",
    "discriminant",
    "projective_discriminant",
    "is_square_free_form",
    "rational_and_quadratic_factor",
    "descartes_gap_bound",
    "resultant_forms",
]


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous bivariate polynomial with exact coefficients."""

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, got {len(self.coeffs)}"
            )
        dom = QQ
        for c in self.coeffs:
            dom = join_domains(dom, domain_of_scalar(c if not isinstance(c, int) else Fraction(c)))
        object.__setattr__(
            self, "coeffs", tuple(embed(Fraction(c) if isinstance(c, int) else c, dom) for c in self.coeffs)
        )
        object.__setattr__(self, "_domain", dom)

    # -- constructors -------------------------------------------------------

    @classmethod
    def of(cls, coeffs, degree: int | None = None) -> "BinaryForm":
        coeffs = list(coeffs)
        if degree is None:
            degree = len(coeffs) - 1
        return cls(degree, tuple(coeffs))

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, tuple(Fraction(0) for _ in range(degree + 1)))

    @classmethod
    def monomial(cls, degree: int, y_power: int, coeff=Fraction(1)) -> "BinaryForm":
        c = [Fraction(0)] * (degree + 1)
        c[y_power] = coeff
        return cls(degree, tuple(c))

    @classmethod
    def linear(cls, alpha, beta) -> "BinaryForm":
        """The linear form ``alpha*x + beta*y``."""
        return cls(1, (alpha, beta))

    @classmethod
    def from_univariate(cls, poly: list, degree: int) -> "BinaryForm":
        """Homogenize an ascending coefficient list to the given degree."""
        if _deg(poly) > degree:
            raise ValueError("polynomial degree exceeds homogenization degree")
        c = []
        for j in range(degree + 1):
            i = degree - j
            c.append(poly[i] if i < len(poly) else Fraction(0))
        return cls(degree, tuple(c))

    # -- structure ----------------------------------------------------------

    @property
    def domain(self) -> Domain:
        return self._domain  # type: ignore[attr-defined]

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coeffs)

    def y_valuation(self) -> int:
        """Multiplicity of the root at infinity, i.e. the power of y dividing f."""
        for i, c in enumerate(self.coeffs):
            if not is_zero(c):
                return i
        return self.degree + 1  # zero form

    def univariate(self) -> list:
        """Ascending coefficients of ``f(x, 1)`` (trailing zeros trimmed)."""
        return _trim([self.coeffs[self.degree - j] for j in range(self.degree + 1)])

    def leading(self):
        """First nonzero coefficient (x-leading)."""
        for c in self.coeffs:
            if not is_zero(c):
                return c
        raise ValueError("zero form has no leading coefficient")

    def monic_first(self) -> "BinaryForm":
        """Scale so the first nonzero coefficient is 1."""
        lead = self.leading()
        return BinaryForm(self.degree, tuple(c / lead for c in self.coeffs))

    # -- arithmetic ----------------------------------------------------------

    def _binop_coeffs(self, other: "BinaryForm"):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return zip(self.coeffs, other.coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        return BinaryForm(self.degree, tuple(a + b for a, b in self._binop_coeffs(other)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return BinaryForm(self.degree, tuple(a - b for a, b in self._binop_coeffs(other)))

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            d = self.degree + other.degree
            out = [Fraction(0)] * (d + 1)
            for i, a in enumerate(self.coeffs):
                if is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return BinaryForm(d, tuple(out))
        return BinaryForm(self.degree, tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BinaryForm":
        if n < 0:
            raise ValueError("negative form powers are undefined")
        out = BinaryForm(0, (Fraction(1),))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def derivative_x(self) -> "BinaryForm":
        if self.degree == 0:
            return BinaryForm(0, (Fraction(0),))
        d = self.degree
        return BinaryForm(d - 1, tuple(self.coeffs[i] * (d - i) for i in range(d)))

    def derivative_y(self) -> "BinaryForm":
        if self.degree == 0:
            return BinaryForm(0, (Fraction(0),))
        d = self.degree
        return BinaryForm(d - 1, tuple(self.coeffs[j + 1] * (j + 1) for j in range(d)))

    def evaluate(self, x0, y0):
        acc = Fraction(0)
        d = self.degree
        for i, c in enumerate(self.coeffs):
            if is_zero(c):
                continue
            term = c
            for _ in range(d - i):
                term = term * x0
            for _ in range(i):
                term = term * y0
            acc = acc + term
        return acc

    def substitute_linear(self, a, b, c, e) -> "BinaryForm":
        """``f(a*x + b*y, c*x + e*y)`` -- degree is preserved."""
        d = self.degree
        u = BinaryForm.linear(a, b)
        v = BinaryForm.linear(c, e)
        u_pows = [BinaryForm(0, (Fraction(1),))]
        v_pows = [BinaryForm(0, (Fraction(1),))]
        for _ in range(d):
            u_pows.append(u_pows[-1] * u)
            v_pows.append(v_pows[-1] * v)
        out = BinaryForm.zero(d)
        for i, coeff in enumerate(self.coeffs):
            if is_zero(coeff):
                continue
            out = out + coeff * (u_pows[d - i] * v_pows[i])
        return out

    def divide_exact(self, g: "BinaryForm") -> "BinaryForm | None":
        """Exact quotient ``f / g`` as forms, or None when g does not divide f."""
        if g.is_zero():
            raise ZeroDivisionError("division by the zero form")
        if self.is_zero():
            return BinaryForm.zero(self.degree - g.degree) if self.degree >= g.degree else None
        vf, vg = self.y_valuation(), g.y_valuation()
        if vg > vf or g.degree > self.degree:
            return None
        q, r = _divmod(self.univariate(), g.univariate())
        if _deg(r) >= 0:
            return None
        return BinaryForm.from_univariate(q, self.degree - g.degree)

    def __str__(self):
        from .parse import render_form

        return render_form(self)

    def __repr__(self):
        return f"BinaryForm({self.degree}, {self.coeffs!r})"


# ---------------------------------------------------------------------------
# dense univariate helpers (ascending coefficient lists over a field)
# ---------------------------------------------------------------------------


def _trim(p: list) -> list:
    while p and is_zero(p[-1]):
        p.pop()
    return p


def _deg(p: list) -> int:
    return len(p) - 1


def _add(p: list, q: list) -> list:
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else Fraction(0)
        b = q[i] if i < len(q) else Fraction(0)
        out.append(a + b)
    return _trim(out)


def _scale(p: list, s) -> list:
    return _trim([c * s for c in p])


def _mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if is_zero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return _trim(out)


def _divmod(p: list, q: list) -> tuple[list, list]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quot = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    dq = _deg(q)
    lead = q[-1]
    while _deg(r) >= dq and r:
        shift = _deg(r) - dq
        factor = r[-1] / lead
        quot[shift] = factor
        for i in range(len(q)):
            r[shift + i] = r[shift + i] - factor * q[i]
        _trim(r)
    return _trim(quot), r


def _derivative(p: list) -> list:
    return _trim([p[i] * i for i in range(1, len(p))])


def _eval(p: list, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _primitive(p: list) -> list:
    content = rational_content(p)
    if content in (0, 1):
        return list(p)
    return [c / content for c in p]


def _monic(p: list) -> list:
    if not p:
        return []
    lead = p[-1]
    return [c / lead for c in p]


def _gcd(p: list, q: list) -> list:
    """Monic gcd by the Euclidean algorithm with primitive-part reduction."""
    a, b = _primitive(_trim(list(p))), _primitive(_trim(list(q)))
    while b:
        _, r = _divmod(a, b)
        a, b = b, _primitive(r)
    return _monic(a)


# ---------------------------------------------------------------------------
# Sturm sequences and real root counting
# ---------------------------------------------------------------------------


def _sturm_chain(p: list) -> list[list]:
    chain = [_primitive(list(p)), _primitive(_derivative(p))]
    if not chain[1]:
        chain.pop()
    while chain[-1] and _deg(chain[-1]) > 0:
        _, r = _divmod(chain[-2], chain[-1])
        r = _primitive([-c for c in r])
        if not r:
            break
        chain.append(r)
    return chain


def _sign_at(p: list, x) -> int:
    return sign(_eval(p, x))


def _sign_at_inf(p: list, positive: bool) -> int:
    if not p:
        return 0
    s = sign(p[-1])
    if positive:
        return s
    return s if _deg(p) % 2 == 0 else -s


def _variations(signs: list[int]) -> int:
    seq = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a * b < 0)


def _sturm_count_all(p: list) -> int:
    """Distinct real roots of a square-free polynomial, by Sturm's theorem."""
    if _deg(p) <= 0:
        return 0
    chain = _sturm_chain(p)
    vminus = _variations([_sign_at_inf(c, positive=False) for c in chain])
    vplus = _variations([_sign_at_inf(c, positive=True) for c in chain])
    return vminus - vplus


def _sturm_count_upto(chain: list[list], x) -> int:
    return _variations([_sign_at(c, x) for c in chain])


def _cauchy_bound(p: list) -> Fraction:
    lead = p[-1]
    best = Fraction(0)
    for c in p[:-1]:
        # works for rationals and real quadratic scalars alike
        ratio = c / lead
        mag = _abs_upper(ratio)
        if mag > best:
            best = mag
    return best + 1


def _abs_upper(s) -> Fraction:
    """A rational upper bound on ``|s|`` under the real embedding."""
    if isinstance(s, (int, Fraction)):
        return abs(Fraction(s))
    if isinstance(s, QuadExt):
        if s.m < 0:
            raise DomainError("no real embedding for negative radicand")
        root_bound = Fraction(math.isqrt(s.m) + 1)
        return abs(s.a) + abs(s.b) * root_bound
    raise DomainError(f"no real embedding for {type(s).__name__}")


def isolate_real_roots(p: list) -> list[tuple]:
    """Locate all real roots of a square-free polynomial.

    Returns a sorted list of ``("exact", m)`` and ``("interval", a, b)``
    entries; intervals are open, contain exactly one root each, and have
    non-root rational endpoints.
    """
    p = _trim(list(p))
    if _deg(p) <= 0:
        return []
    chain = _sturm_chain(p)
    bound = _cauchy_bound(p)
    lo, hi = -bound - 1, bound + 1

    out: list[tuple] = []

    def recurse(a: Fraction, b: Fraction, count: int):
        if count == 0:
            return
        if count == 1:
            out.append(("interval", a, b))
            return
        mid = (a + b) / 2
        if is_zero(_eval(p, mid)):
            out.append(("exact", mid))
            # shrink around the exact root until the flanks separate cleanly
            eps = (b - a) / 4
            while True:
                la, lb = mid - eps, mid + eps
                if not is_zero(_eval(p, la)) and not is_zero(_eval(p, lb)):
                    break
                eps /= 2
            left = _sturm_count_upto(chain, a) - _sturm_count_upto(chain, la)
            right = _sturm_count_upto(chain, lb) - _sturm_count_upto(chain, b)
            recurse(a, la, left)
            recurse(lb, b, right)
            return
        left = _sturm_count_upto(chain, a) - _sturm_count_upto(chain, mid)
        recurse(a, mid, left)
        recurse(mid, b, count - left)

    total = _sturm_count_upto(chain, lo) - _sturm_count_upto(chain, hi)
    recurse(lo, hi, total)

    def key(entry):
        return entry[1] if entry[0] == "exact" else (entry[1] + entry[2]) / 2

    return sorted(out, key=key)


# ---------------------------------------------------------------------------
# form-level operations
# ---------------------------------------------------------------------------


def gcd_forms(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic greatest common divisor; the y-power is pulled out first."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero forms is undefined")
    if f.is_zero():
        return g.monic_first()
    if g.is_zero():
        return f.monic_first()
    vf, vg = f.y_valuation(), g.y_valuation()
    core = _gcd(f.univariate(), g.univariate())
    v = min(vf, vg)
    form = BinaryForm.from_univariate(core, _deg(core))
    if v:
        form = form * BinaryForm.monomial(v, v)
    return form.monic_first()


def square_free_decompose(f: BinaryForm) -> list[tuple[BinaryForm, int]]:
    """Yun decomposition ``f = scalar * prod part_j ** j`` into monic
    square-free, pairwise coprime parts (sorted by multiplicity)."""
    if f.is_zero():
        raise ValueError("cannot decompose the zero form")
    v = f.y_valuation()
    p = _monic(f.univariate())
    parts: dict[int, BinaryForm] = {}
    if _deg(p) >= 1:
        for poly, mult in _yun(p):
            parts[mult] = BinaryForm.from_univariate(poly, _deg(poly))
    if v >= 1:
        y = BinaryForm.monomial(1, 1)
        if v in parts:
            parts[v] = (parts[v] * y).monic_first()
        else:
            parts[v] = y
    return [(parts[m], m) for m in sorted(parts)]


def _yun(p: list) -> list[tuple[list, int]]:
    dp = _derivative(p)
    g = _gcd(p, dp)
    b, _ = _divmod(p, g)
    c, _ = _divmod(dp, g)
    d = _add(c, _scale(_derivative(b), Fraction(-1)))
    out = []
    i = 1
    while _deg(b) > 0:
        a = _gcd(b, d)
        if _deg(a) > 0:
            out.append((a, i))
        b, _ = _divmod(b, a)
        cnew, _ = _divmod(d, a)
        d = _add(cnew, _scale(_derivative(b), Fraction(-1)))
        i += 1
    return out


def decomposition_scalar(f: BinaryForm, parts: list[tuple[BinaryForm, int]]):
    """The scalar making ``scalar * prod part^mult`` equal ``f`` exactly."""
    prod = BinaryForm(0, (Fraction(1),))
    for part, mult in parts:
        prod = prod * part**mult
    if prod.degree != f.degree:
        raise ValueError("parts do not multiply back to the input degree")
    return f.leading() / prod.leading()


def real_root_count(f: BinaryForm, with_multiplicity: bool = False) -> int:
    """Number of real projective roots (the root at infinity counts)."""
    if f.is_zero():
        raise ValueError("zero form has no root count")
    total = 0
    for part, mult in square_free_decompose(f):
        v = part.y_valuation()
        n = _sturm_count_all(part.univariate()) + (1 if v else 0)
        total += n * (mult if with_multiplicity else 1)
    return total


def is_hyperbolic(f: BinaryForm) -> bool:
    """All roots real, counted with multiplicity."""
    return real_root_count(f, with_multiplicity=True) == f.degree


def _sylvester_matrix(p: list, q: list, dp: int, dq: int) -> list[list]:
    """Sylvester matrix for formal degrees ``dp``, ``dq`` (descending rows)."""
    n = dp + dq
    rows = []
    pd = [p[i] if i < len(p) else Fraction(0) for i in range(dp + 1)][::-1]
    qd = [q[i] if i < len(q) else Fraction(0) for i in range(dq + 1)][::-1]
    for i in range(dq):
        rows.append([Fraction(0)] * i + pd + [Fraction(0)] * (n - dp - 1 - i))
    for i in range(dp):
        rows.append([Fraction(0)] * i + qd + [Fraction(0)] * (n - dq - 1 - i))
    return rows


def resultant_forms(f: BinaryForm, g: BinaryForm):
    """Resultant of two forms at their formal degrees: zero exactly when they
    share a projective root (including the point at infinity)."""
    if f.degree == 0 or g.degree == 0:
        base = f.coeffs[0] if f.degree == 0 else g.coeffs[0]
        other = g if f.degree == 0 else f
        return base ** other.degree
    p = [f.coeffs[f.degree - j] for j in range(f.degree + 1)]
    q = [g.coeffs[g.degree - j] for j in range(g.degree + 1)]
    rows = _sylvester_matrix(p, q, f.degree, g.degree)
    return linalg.determinant(rows)


def projective_discriminant(f: BinaryForm):
    """Unnormalized discriminant ``Res(f_x, f_y)``: a polynomial function of
    the coefficients vanishing exactly on forms with a repeated projective
    root.  Degree at most ``2d - 2`` in the coefficients."""
    if f.degree <= 1:
        return Fraction(1) if not f.is_zero() else Fraction(0)
    return resultant_forms(f.derivative_x(), f.derivative_y())


def is_square_free_form(f: BinaryForm) -> bool:
    """No repeated projective root."""
    if f.is_zero():
        return False
    if f.degree <= 1:
        return True
    return not is_zero(projective_discriminant(f))


def discriminant(f: BinaryForm):
    """Discriminant of the dehomogenization, normalized so that a monic cubic
    ``x^3 + p x + q`` yields ``-4p^3 - 27q^2`` and a quadratic ``b^2 - 4ac``.

    Zero exactly when ``f`` has a repeated projective root (a repeated root
    at infinity is detected through the degree drop)."""
    if f.degree < 2:
        raise ValueError("discriminant needs degree >= 2")
    if f.is_zero():
        return Fraction(0)
    p = f.univariate()
    e = _deg(p)
    if f.degree - e >= 2:
        return Fraction(0)
    if e <= 0:
        return Fraction(0)
    if e == 1:
        return Fraction(1)
    dp = _derivative(p)
    rows = _sylvester_matrix(p, dp, e, e - 1)
    res = linalg.determinant(rows)
    s = -1 if (e * (e - 1) // 2) % 2 else 1
    return s * res / p[-1]


# ---------------------------------------------------------------------------
# limited exact factorization over Q and Q(sqrt(m))
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FactorizationShape:
    """Partial factorization: rational (or optionally quadratic-extension)
    linear factors, real-irreducible quadratic factors, and whatever is left.

    ``scalar * prod(linear^mult) * prod(quadratic^mult) * remainder == f``.
    """

    linear_factors: tuple[tuple[BinaryForm, int], ...]
    quadratic_factors: tuple[tuple[BinaryForm, int], ...]
    remainder: BinaryForm
    scalar: object

    def reassemble(self) -> BinaryForm:
        out = BinaryForm(0, (Fraction(1),)) * self.scalar
        for form, mult in self.linear_factors:
            out = out * form**mult
        for form, mult in self.quadratic_factors:
            out = out * form**mult
        return out * self.remainder


def _divisors(n: int) -> list[int]:
    out = [1]
    for prime, exp in factorize(n).items():
        out = [d * prime**k for d in out for k in range(exp + 1)]
    return sorted(out)


def _rational_roots_squarefree(p: list) -> list[Fraction]:
    """All rational roots of a square-free rational polynomial."""
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    roots = []
    while ints and ints[0] == 0:
        roots.append(Fraction(0))
        ints = ints[1:]
        break  # square-free: zero root is simple
    if _deg(ints) < 1:
        return roots
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    ints = [c // g for c in ints]
    for pnum in _divisors(abs(ints[0])):
        for qden in _divisors(abs(ints[-1])):
            if math.gcd(pnum, qden) != 1:
                continue
            for cand in (Fraction(pnum, qden), Fraction(-pnum, qden)):
                if _eval([Fraction(c) for c in ints], cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def _linear_form_for_root(t: Fraction) -> BinaryForm:
    """Monic linear form ``x - t*y`` vanishing at the projective point (t : 1)."""
    return BinaryForm.linear(Fraction(1), -t)


def rational_and_quadratic_factor(
    f: BinaryForm, split_quadratic: bool = False
) -> FactorizationShape:
    """Extract rational projective roots (the point at infinity included) and,
    when a square-free residual of degree 2 remains, optionally split it over
    ``Q(sqrt(m))``.  Residuals of degree >= 3 without rational roots stay
    unfactored."""
    if f.domain.kind != "QQ":
        raise DomainError("rational factorization needs rational coefficients")
    if f.is_zero():
        raise ValueError("cannot factor the zero form")
    linear: list[tuple[BinaryForm, int]] = []
    quads: list[tuple[BinaryForm, int]] = []
    remainder = BinaryForm(0, (Fraction(1),))
    for part, mult in square_free_decompose(f):
        if part.y_valuation():
            linear.append((BinaryForm.monomial(1, 1), mult))
        p = part.univariate()
        if _deg(p) < 1:
            continue
        for root in _rational_roots_squarefree(p):
            linear.append((_linear_form_for_root(root), mult))
            p, _ = _divmod(p, [-root, Fraction(1)])
        if _deg(p) < 1:
            continue
        rest = BinaryForm.from_univariate(_monic(p), _deg(p))
        if _deg(p) == 2:
            a, b, c = p[2], p[1], p[0]
            disc = b * b - 4 * a * c
            if split_quadratic:
                root_disc = sqrt_rational(disc)
                t1 = (-b + root_disc) / (2 * a)
                t2 = (-b - root_disc) / (2 * a)
                linear.append((BinaryForm.linear(Fraction(1), -1 * t1), mult))
                linear.append((BinaryForm.linear(Fraction(1), -1 * t2), mult))
                continue
            if disc < 0:
                quads.append((rest, mult))
                continue
        remainder = remainder * rest**mult
    shape = FactorizationShape(tuple(linear), tuple(quads), remainder, Fraction(1))
    assembled = shape.reassemble()
    scalar = f.leading() / assembled.leading()
    shape = FactorizationShape(tuple(linear), tuple(quads), remainder, scalar)
    if shape.reassemble() != f:
        raise DomainError("factorization failed to reassemble (irrational input?)")
    return shape


# ---------------------------------------------------------------------------
# vanishing-coefficient bound on non-real roots
# ---------------------------------------------------------------------------


def descartes_gap_bound(f: BinaryForm) -> int:
    """Lower bound on the number of non-real roots from runs of vanishing
    interior coefficients: a run of length L contributes ``2*floor(L/2)``,
    summed over disjoint runs.  Requires nonzero extreme coefficients
    (otherwise 0)."""
    d = f.degree
    if d < 2 or f.is_zero():
        return 0
    if is_zero(f.coeffs[0]) or is_zero(f.coeffs[d]):
        return 0
    total = 0
    run = 0
    for i in range(1, d):
        if is_zero(f.coeffs[i]):
            run += 1
        else:
            total += 2 * (run // 2)
            run = 0
    total += 2 * (run // 2)
    return total
