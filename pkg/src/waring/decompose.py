"""Power-sum representations: extraction from Sylvester forms, exact and
numeric verification, and the parametric families used throughout."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import linalg
from .apolarity import apply_diffop, binomial_view
from .binform import BinaryForm, is_square_free_form, rational_and_quadratic_factor
from .scalar import (
    BigApprox,
    DEFAULT_PRECISION,
    DomainError,
    InternalInvariantError,
    QQ,
    embed,
    is_zero,
    scalar_text,
    sqrt_rational,
)

__all__ = [
    "Summand",
    "Decomposition",
    "VerifyResult",
    "IdentityReport",
    "PdFamily",
    "extract_decomposition",
    "verify_decomposition",
    "expand_decomposition",
    "gen_flambda",
    "flambda_identity_check",
    "gen_pd",
    "decomposition_from_json",
]


@dataclass(frozen=True)
class Summand:
    """One term ``weight * (alpha*x + beta*y)^d``."""

    weight: object
    alpha: object
    beta: object

    def is_numeric(self) -> bool:
        return any(isinstance(v, BigApprox) for v in (self.weight, self.alpha, self.beta))


@dataclass(frozen=True)
class Decomposition:
    """A list of weighted d-th powers of linear forms with honesty status."""

    degree: int
    summands: tuple
    exact: bool
    residual: object = None  # mpf bound for numeric decompositions
    precision: int = DEFAULT_PRECISION

    def __len__(self) -> int:
        return len(self.summands)

    def is_honest(self) -> bool:
        """Pairwise distinct summands with nonzero weights."""
        for i, s in enumerate(self.summands):
            if self._is_cert_zero(s.weight):
                return False
            for t in self.summands[i + 1 :]:
                cross = self._cross(s, t)
                if self._is_cert_zero(cross):
                    return False
        return True

    @staticmethod
    def _cross(s: Summand, t: Summand):
        return s.alpha * t.beta - s.beta * t.alpha

    @staticmethod
    def _is_cert_zero(v) -> bool:
        if isinstance(v, BigApprox):
            with mpmath.workprec(v.prec + 20):
                return not (abs(v.value) > v.err)
        return is_zero(v)

    def to_json(self) -> dict:
        out = {
            "degree": self.degree,
            "summands": [
                {
                    "lambda": scalar_text(s.weight),
                    "alpha": scalar_text(s.alpha),
                    "beta": scalar_text(s.beta),
                }
                for s in self.summands
            ],
        }
        if self.exact:
            out["exactness"] = "exact"
        else:
            out["exactness"] = {"numeric": {"residual": mpmath.nstr(self.residual, 8)}}
        return out


def decomposition_from_json(data: dict, precision: int = DEFAULT_PRECISION) -> Decomposition:
    from .parse import parse_scalar_or_numeric

    summands = []
    for entry in data["summands"]:
        summands.append(
            Summand(
                parse_scalar_or_numeric(entry["lambda"], precision),
                parse_scalar_or_numeric(entry["alpha"], precision),
                parse_scalar_or_numeric(entry["beta"], precision),
            )
        )
    exact = data.get("exactness") == "exact"
    residual = None
    if not exact:
        residual = mpmath.mpf(data["exactness"]["numeric"]["residual"])
    return Decomposition(
        degree=data["degree"],
        summands=tuple(summands),
        exact=exact,
        residual=residual,
        precision=precision,
    )


# ---------------------------------------------------------------------------
# extraction
# ---------------------------------------------------------------------------


def _direction_from_linear(lin: BinaryForm):
    """A linear factor ``a*y - b*x`` of the Sylvester form pairs with the
    direction ``(alpha, beta) = (a, b)``, normalized to a leading 1."""
    c0, c1 = lin.coeffs
    alpha, beta = c1, -1 * c0
    if not is_zero(alpha):
        return Fraction(1), beta / alpha
    return Fraction(0), Fraction(1)


def _solve_weights_exact(f: BinaryForm, directions: list) -> list:
    from .scalar import domain_of_scalar, join_domains

    d = f.degree
    view = binomial_view(f)
    dom = f.domain
    for alpha, beta in directions:
        dom = join_domains(dom, domain_of_scalar(alpha))
        dom = join_domains(dom, domain_of_scalar(beta))
    lifted = [(embed(alpha, dom), embed(beta, dom)) for alpha, beta in directions]
    rows = []
    for i in range(d + 1):
        rows.append([alpha ** (d - i) * beta**i for alpha, beta in lifted])
    sol = linalg.solve_unique(rows, [embed(a, dom) for a in view.a])
    if sol is None:
        raise InternalInvariantError("weight system inconsistent for an apolar Sylvester form")
    return sol


def extract_decomposition(
    f: BinaryForm,
    h: BinaryForm,
    allow_numeric: bool = True,
    precision: int | None = None,
) -> Decomposition:
    """Turn a Sylvester form into an explicit power-sum representation.

    Exact mode requires ``h`` to split over Q or a single quadratic extension;
    everything else falls back to certified numeric extraction (root finding
    at the requested precision plus an a-posteriori residual bound).

    Summands whose solved weight is exactly zero are dropped, so the result
    is always honest.
    """
    precision = precision or DEFAULT_PRECISION
    if h.is_zero() or f.is_zero():
        raise ValueError("zero input")
    if not apply_diffop(h, f).is_zero():
        raise ValueError("the given form is not apolar to the input")
    if not is_square_free_form(h):
        raise ValueError("a Sylvester form must be square-free")
    h_rat = _try_rational(h)
    if h_rat is not None:
        try:
            shape = rational_and_quadratic_factor(h_rat, split_quadratic=True)
        except DomainError:
            shape = None
        if shape is not None and shape.remainder.degree == 0:
            directions = [_direction_from_linear(lin) for lin, _ in shape.linear_factors]
            weights = _solve_weights_exact(f, directions)
            summands = tuple(
                Summand(w, a, b)
                for w, (a, b) in zip(weights, directions)
                if not is_zero(w)
            )
            return Decomposition(f.degree, summands, exact=True, precision=precision)
    if not allow_numeric:
        raise ValueError(
            "Sylvester form does not split over a quadratic extension; numeric mode disabled"
        )
    return _extract_numeric(f, h, precision)


def _try_rational(h: BinaryForm) -> BinaryForm | None:
    try:
        return BinaryForm(h.degree, tuple(embed(c, QQ) for c in h.coeffs))
    except DomainError:
        return None


def _extract_numeric(f: BinaryForm, h: BinaryForm, precision: int) -> Decomposition:
    with mpmath.workprec(precision + 60):
        directions: list[tuple] = []
        if h.y_valuation() >= 1:
            directions.append((mpmath.mpf(1), mpmath.mpf(0)))
        poly = h.univariate()
        if len(poly) > 1:
            desc = [
                BigApprox.from_scalar(c, precision + 40).value for c in reversed(poly)
            ]
            roots = mpmath.polyroots(
                desc, maxsteps=300, extraprec=precision // 2 + 40
            )
            for t in roots:
                if abs(t) < mpmath.mpf(2) ** (-(precision // 2)):
                    directions.append((mpmath.mpf(0), mpmath.mpf(1)))
                else:
                    directions.append((mpmath.mpf(1), 1 / t))
        d = f.degree
        view = binomial_view(f)
        rows = mpmath.matrix(d + 1, len(directions))
        rhs = mpmath.matrix(d + 1, 1)
        for i in range(d + 1):
            for k, (alpha, beta) in enumerate(directions):
                rows[i, k] = alpha ** (d - i) * beta**i
            rhs[i] = BigApprox.from_scalar(view.a[i], precision + 40).value
        sol = mpmath.qr_solve(rows, rhs)[0]
        summands = tuple(
            Summand(
                BigApprox(sol[k], BigApprox._slack(sol[k], precision), precision),
                BigApprox(alpha, BigApprox._slack(alpha, precision), precision),
                BigApprox(beta, BigApprox._slack(beta, precision), precision),
            )
            for k, (alpha, beta) in enumerate(directions)
        )
    dec = Decomposition(f.degree, summands, exact=False, precision=precision)
    residual = _numeric_residual(dec, f)
    return Decomposition(f.degree, summands, exact=False, residual=residual, precision=precision)


# ---------------------------------------------------------------------------
# expansion and verification
# ---------------------------------------------------------------------------


def expand_decomposition(dec: Decomposition) -> BinaryForm:
    """Exact expansion ``sum weight*(alpha x + beta y)^d`` (exact mode only)."""
    if not dec.exact:
        raise ValueError("numeric decompositions cannot be expanded exactly")
    out = BinaryForm.zero(dec.degree)
    for s in dec.summands:
        out = out + s.weight * (BinaryForm.linear(s.alpha, s.beta) ** dec.degree)
    return out


def _numeric_residual(dec: Decomposition, f: BinaryForm):
    prec = dec.precision
    d = dec.degree
    acc = [BigApprox.exact(0, prec) for _ in range(d + 1)]
    for s in dec.summands:
        w = BigApprox.from_scalar(s.weight, prec)
        a = BigApprox.from_scalar(s.alpha, prec)
        b = BigApprox.from_scalar(s.beta, prec)
        apow = [BigApprox.exact(1, prec)]
        bpow = [BigApprox.exact(1, prec)]
        for _ in range(d):
            apow.append(apow[-1] * a)
            bpow.append(bpow[-1] * b)
        for i in range(d + 1):
            term = w * apow[d - i] * bpow[i] * Fraction(math.comb(d, i))
            acc[i] = acc[i] + term
    worst = mpmath.mpf(0)
    with mpmath.workprec(prec + 20):
        for i in range(d + 1):
            diff = acc[i] - BigApprox.from_scalar(f.coeffs[i], prec)
            bound = abs(diff.value) + diff.err
            if bound > worst:
                worst = bound
    return worst


@dataclass(frozen=True)
class VerifyResult:
    status: str  # "exact_match" | "mismatch" | "numeric"
    diff: BinaryForm | None = None
    residual: object = None
    honest: bool = True


def verify_decomposition(dec: Decomposition, f: BinaryForm) -> VerifyResult:
    """Re-expand a decomposition against ``f``: coefficientwise exact
    comparison in the smallest common field, or a certified residual bound."""
    if dec.degree != f.degree:
        raise ValueError("degree mismatch between decomposition and form")
    honest = dec.is_honest()
    if dec.exact:
        expanded = expand_decomposition(dec)
        diff = expanded - f
        if diff.is_zero():
            return VerifyResult("exact_match", honest=honest)
        return VerifyResult("mismatch", diff=diff, honest=honest)
    residual = _numeric_residual(dec, f)
    return VerifyResult("numeric", residual=residual, honest=honest)


# ---------------------------------------------------------------------------
# parametric families
# ---------------------------------------------------------------------------


def gen_flambda(k: int, lam) -> BinaryForm:
    """``x^(2k) + C(2k, k) * lam * x^k y^k + y^(2k)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    coeffs: list = [Fraction(0)] * (2 * k + 1)
    coeffs[0] = Fraction(1)
    coeffs[2 * k] = Fraction(1)
    coeffs[k] = math.comb(2 * k, k) * lam
    return BinaryForm(2 * k, tuple(coeffs))


def _integer_kth_root(n: int, k: int) -> int | None:
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def _rational_kth_root(q: Fraction, k: int) -> Fraction | None:
    if q == 0:
        return Fraction(0)
    neg = q < 0
    if neg and k % 2 == 0:
        return None
    num = _integer_kth_root(abs(q.numerator), k)
    den = _integer_kth_root(q.denominator, k)
    if num is None or den is None:
        return None
    root = Fraction(num, den)
    return -root if neg else root


@dataclass(frozen=True)
class IdentityReport:
    status: str  # "verified" | "failed"
    mode: str  # "exact" | "numeric"
    residual: object = None
    diff: BinaryForm | None = None


def flambda_identity_check(k: int, lam, precision: int | None = None) -> IdentityReport:
    """Verify the family identity expressing ``f_lam`` through the k-th roots
    of unity: the interior sum collapses because ``sum_i zeta_k^(i*j)``
    vanishes unless ``k | j``.  Rational ``lam = mu^k`` verifies by the exact
    symbolic collapse; other values verify numerically at the given precision.
    """
    if k < 2:
        raise ValueError("identity check needs k >= 2")
    lam = Fraction(lam) if isinstance(lam, int) else lam
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    precision = precision or DEFAULT_PRECISION
    lhs = gen_flambda(k, lam)
    mu = _rational_kth_root(lam, k) if isinstance(lam, Fraction) else None
    if mu is not None:
        # exact collapse: only j with k | j survive, each with weight k * (1/k)
        d = 2 * k
        coeffs: list = [Fraction(0)] * (d + 1)
        for j in (0, k, 2 * k):
            coeffs[j] = math.comb(d, j) * mu**j
        coeffs[d] = coeffs[d] + (1 - lam * lam)
        rhs = BinaryForm(d, tuple(coeffs))
        diff = lhs - rhs
        if diff.is_zero():
            return IdentityReport("verified", "exact")
        return IdentityReport("failed", "exact", diff=diff)
    with mpmath.workprec(precision + 40):
        d = 2 * k
        lam_num = BigApprox.from_scalar(lam, precision + 20).value
        mu_num = mpmath.power(mpmath.mpc(lam_num), mpmath.mpf(1) / k)
        zeta = mpmath.expjpi(mpmath.mpf(2) / k)
        worst = mpmath.mpf(0)
        for j in range(d + 1):
            acc = mpmath.mpc(0)
            for i in range(k):
                acc += zeta ** (i * j)
            rhs_j = math.comb(d, j) * mu_num**j * acc / k
            if j == d:
                rhs_j += 1 - lam_num * lam_num
            lhs_j = BigApprox.from_scalar(lhs.coeffs[j], precision + 20).value
            err = abs(rhs_j - lhs_j)
            if err > worst:
                worst = err
        threshold = mpmath.mpf(2) ** (-(precision // 2))
        status = "verified" if worst < threshold else "failed"
        return IdentityReport(status, "numeric", residual=worst)


@dataclass(frozen=True)
class PdFamily:
    form: BinaryForm
    decomposition: Decomposition
    note: str = ""


def gen_pd(d: int, gamma) -> PdFamily:
    """The even-coefficient family ``sum C(d, 2i) gamma^i x^(d-2i) y^(2i)``
    together with its two-term representation over ``Q(sqrt(gamma))``."""
    if d < 3:
        raise ValueError("the family needs degree >= 3")
    gamma = Fraction(gamma)
    if gamma == 0:
        raise ValueError("gamma must be nonzero")
    coeffs: list = [Fraction(0)] * (d + 1)
    for i in range(0, d // 2 + 1):
        coeffs[2 * i] = math.comb(d, 2 * i) * gamma**i
    form = BinaryForm(d, tuple(coeffs))
    root = sqrt_rational(gamma)
    dec = Decomposition(
        d,
        (
            Summand(Fraction(1, 2), Fraction(1), root),
            Summand(Fraction(1, 2), Fraction(1), -1 * root),
        ),
        exact=True,
    )
    note = ""
    if isinstance(root, Fraction):
        note = "gamma is a rational square: the representation is rational"
    return PdFamily(form, dec, note)
