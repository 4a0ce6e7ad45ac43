"""Rank engines: complex Waring rank by Sylvester's kernel search, lower
bounds from factorization multiplicities and real root counts, certified
real-rank computation, and the rank-3 field classification for cubic
Sylvester forms."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .apolarity import apply_diffop, kernel_at
from .binform import (
    BinaryForm,
    _add,
    _deg,
    _derivative,
    _divmod,
    _gcd,
    _mul,
    _scale,
    descartes_gap_bound,
    discriminant,
    gcd_forms,
    is_hyperbolic,
    is_square_free_form,
    isolate_real_roots,
    projective_discriminant,
    rational_and_quadratic_factor,
    real_root_count,
    square_free_decompose,
)
from .decompose import gen_flambda
from .scalar import (
    DomainError,
    InternalInvariantError,
    is_square_in_q,
    is_zero,
    square_free_part,
)

__all__ = [
    "RankCertificate",
    "SearchBudget",
    "Rank3Classification",
    "SmallRankResult",
    "FullRankFlags",
    "complex_rank",
    "multiplicity_lower_bound",
    "real_rank",
    "classify_small_rank",
    "full_rank_test",
    "flambda_real_bracket",
    "flambda_gap_evidence",
    "recheck_certificate",
]


@dataclass(frozen=True)
class RankCertificate:
    """Machine-checkable witness for a rank claim.

    ``claim`` is one of ``complex_rank`` / ``real_rank`` (exact value) or
    ``real_rank_in`` (certified bracket ``[lo, hi]``).  The witness, when
    present, is a square-free apolar form of the claimed degree; real claims
    additionally record Sturm evidence that all its roots are real.
    """

    claim: str
    value: int | None = None
    lo: int | None = None
    hi: int | None = None
    witness: BinaryForm | None = None
    witness_real_rooted: bool | None = None
    evidence: tuple = ()
    diagnostics: tuple = ()

    def is_exact(self) -> bool:
        return self.claim in ("complex_rank", "real_rank")

    def to_json(self) -> dict:
        out: dict = {"claim": {"type": self.claim}}
        if self.is_exact():
            out["claim"]["value"] = self.value
        else:
            out["claim"]["lo"] = self.lo
            out["claim"]["hi"] = self.hi
        out["witness"] = str(self.witness) if self.witness is not None else None
        if self.witness_real_rooted is not None:
            out["witness_real_rooted"] = self.witness_real_rooted
        out["lower_bound_evidence"] = [dict(rec) for rec in self.evidence]
        return out


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the randomized part of the real-rank search (kernel
    dimension >= 3).  The seed is fixed so identical requests replay."""

    samples: int = 200
    seed: int = 2026


# ---------------------------------------------------------------------------
# square-free member search inside a kernel
# ---------------------------------------------------------------------------


def _grid_values(n: int) -> list[Fraction]:
    vals = [Fraction(1), Fraction(0), Fraction(-1)]
    k = 2
    while len(vals) < n:
        vals.append(Fraction(k))
        vals.append(Fraction(-k))
        k += 1
    return vals[:n]


def _combine(basis: tuple, weights) -> BinaryForm:
    out = BinaryForm.zero(basis[0].degree)
    for w, b in zip(weights, basis):
        if w == 0:
            continue
        out = out + w * b
    return out


def _distinct_line_cofactor(g: BinaryForm, w_deg: int) -> BinaryForm | None:
    """A product of ``w_deg`` distinct lines making ``g * w`` square-free."""
    for t0 in range(0, 4 * (g.degree + w_deg) + 4):
        w = BinaryForm(0, (Fraction(1),))
        for j in range(w_deg):
            w = w * BinaryForm.linear(Fraction(1), Fraction(-(t0 + j)))
        if is_square_free_form(g * w):
            return w
    return None


def _find_squarefree_member(f: BinaryForm, kb) -> BinaryForm | None:
    """Complete decision: a square-free member of the kernel, or a proof of
    none.  Uses the deterministic evaluation grid sized by the degree bound
    of the discriminant in the combination parameters."""
    r, basis, dim = kb.r, kb.basis, kb.dim
    if dim == 0:
        return None
    if dim == 1:
        h = basis[0]
        return h if is_square_free_form(h) else None
    g = basis[0]
    for b in basis[1:]:
        g = gcd_forms(g, b)
    if g.degree >= 1 and dim == r - g.degree + 1:
        # the kernel is exactly g * (all forms of degree r - deg g)
        if not is_square_free_form(g):
            return None
        w = _distinct_line_cofactor(g, r - g.degree)
        if w is not None:
            cand = (g * w).monic_first()
            if not apply_diffop(cand, f).is_zero():
                raise InternalInvariantError("kernel structure assumption failed")
            return cand
    vals = _grid_values(2 * r - 1)
    for weights in itertools.product(vals, repeat=dim):
        if all(w == 0 for w in weights):
            continue
        h = _combine(basis, weights)
        if not is_zero(projective_discriminant(h)):
            return h.monic_first()
    return None  # discriminant vanishes identically on the kernel


# ---------------------------------------------------------------------------
# complex rank
# ---------------------------------------------------------------------------


def complex_rank(f: BinaryForm) -> tuple[int, RankCertificate]:
    """Smallest ``r`` whose apolar kernel contains a square-free form, with a
    re-checkable certificate (witness plus per-level emptiness records)."""
    if f.is_zero():
        raise ValueError("zero form has no rank")
    if f.degree == 0:
        raise ValueError("rank needs degree >= 1")
    evidence: list[dict] = []
    for r in range(1, f.degree + 1):
        kb = kernel_at(f, r)
        if kb.dim == 0:
            evidence.append({"kind": "kernel_empty_at", "r": r})
            continue
        witness = _find_squarefree_member(f, kb)
        if witness is None:
            evidence.append({"kind": "no_squarefree_kernel_at", "r": r, "dim": kb.dim})
            continue
        cert = RankCertificate(
            claim="complex_rank",
            value=r,
            witness=witness,
            evidence=tuple(evidence),
        )
        return r, cert
    raise InternalInvariantError("rank search exceeded the degree bound")


def multiplicity_lower_bound(f: BinaryForm) -> int:
    """Largest root multiplicity plus one; 1 for powers of a linear form."""
    if f.is_zero() or f.degree == 0:
        raise ValueError("multiplicity bound needs a nonzero form of degree >= 1")
    parts = square_free_decompose(f)
    if len(parts) == 1 and parts[0][0].degree == 1:
        return 1  # d-th power of a linear form
    return max(mult for part, mult in parts if part.degree >= 1) + 1


def _is_linear_power(f: BinaryForm) -> bool:
    parts = square_free_decompose(f)
    return len(parts) == 1 and parts[0][0].degree == 1


# ---------------------------------------------------------------------------
# real rank
# ---------------------------------------------------------------------------


def _is_real_rooted(h: BinaryForm) -> bool:
    return real_root_count(h, with_multiplicity=True) == h.degree


def _interpolate_disc(b1: BinaryForm, b2: BinaryForm, r: int) -> list:
    """The projective discriminant of ``s*b1 + b2`` as an exact polynomial in
    ``s`` (degree at most 2r-2), by Lagrange interpolation on 2r-1 nodes."""
    n = 2 * r - 1
    nodes = [Fraction(j) for j in range(n)]
    values = [projective_discriminant(_combine((b1, b2), (s, Fraction(1)))) for s in nodes]
    poly: list = []
    for j, xj in enumerate(nodes):
        if is_zero(values[j]):
            continue
        num: list = [Fraction(1)]
        den = Fraction(1)
        for k, xk in enumerate(nodes):
            if k == j:
                continue
            num = _mul(num, [-xk, Fraction(1)])
            den *= xj - xk
        poly = _add(poly, _scale(num, values[j] / den))
    return poly


def _pencil_samples(d_poly: list) -> list[Fraction]:
    dsquare = d_poly
    g = _gcd(d_poly, _derivative(d_poly))
    if _deg(g) >= 1:
        dsquare, _ = _divmod(d_poly, g)
    locators = isolate_real_roots(dsquare)
    if not locators:
        return [Fraction(0)]
    bounds = [(loc[1], loc[1]) if loc[0] == "exact" else (loc[1], loc[2]) for loc in locators]
    samples = [bounds[0][0] - 1]
    for (_, hi), (lo, _) in zip(bounds, bounds[1:]):
        samples.append((hi + lo) / 2)
    samples.append(bounds[-1][1] + 1)
    return samples


def _find_real_sylvester(
    f: BinaryForm, kb, budget: SearchBudget
) -> tuple[BinaryForm | None, bool, str]:
    """Search the kernel for a square-free all-real-rooted member.

    Returns ``(witness, complete, note)``: ``complete`` marks an exhaustive
    decision (kernel dimension at most 2), otherwise the sampling budget ran
    out and absence is not proven.
    """
    r, basis, dim = kb.r, kb.basis, kb.dim
    if dim == 0:
        return None, True, "kernel empty"
    if dim == 1:
        h = basis[0]
        if is_square_free_form(h) and _is_real_rooted(h):
            return h, True, "unique kernel element"
        return None, True, "unique kernel element not real-split"
    if dim == 2:
        b1, b2 = basis
        d_poly = _interpolate_disc(b1, b2, r)
        if not d_poly:
            # every affine pencil member has a repeated root
            if is_square_free_form(b1) and _is_real_rooted(b1):
                return b1, True, "pencil member at infinity"
            return None, True, "pencil discriminant vanishes identically"
        for s in _pencil_samples(d_poly):
            h = _combine((b1, b2), (s, Fraction(1)))
            if is_square_free_form(h) and _is_real_rooted(h):
                return h.monic_first(), True, f"pencil sample s={s}"
        if is_square_free_form(b1) and _is_real_rooted(b1):
            return b1, True, "pencil member at infinity"
        return None, True, "pencil exhausted: no real-split member"
    rng = random.Random(budget.seed + 7919 * r)
    for _ in range(budget.samples):
        weights = [Fraction(rng.randint(-6, 6)) for _ in range(dim)]
        if all(w == 0 for w in weights):
            continue
        h = _combine(basis, weights)
        if h.is_zero():
            continue
        if is_square_free_form(h) and _is_real_rooted(h):
            return h.monic_first(), False, "randomized sample"
    return None, False, f"kernel dim {dim} at r={r}: budget exhausted"


def real_rank(f: BinaryForm, budget: SearchBudget | None = None) -> RankCertificate:
    """Certified real Waring rank: an exact value whenever every undecided
    kernel level has dimension at most 2 (always for hyperbolic inputs and
    for sandwiched bounds), an honest bracket otherwise."""
    if f.is_zero() or f.degree == 0:
        raise ValueError("real rank needs a nonzero form of degree >= 1")
    if _is_linear_power(f):
        raise ValueError("input is a power of a linear form; its rank is 1 in every field")
    budget = budget or SearchBudget()
    d = f.degree
    tau = real_root_count(f, with_multiplicity=True)
    evidence: list[dict] = [{"kind": "tau_bound", "value": tau}]
    if is_hyperbolic(f):
        evidence.append({"kind": "hyperbolic", "value": True})
        return RankCertificate(
            claim="real_rank",
            value=d,
            evidence=tuple(evidence),
            diagnostics=("hyperbolic: real rank equals the degree",),
        )
    mult_bound = multiplicity_lower_bound(f)
    lc, _ = complex_rank(f)
    evidence.append({"kind": "multiplicity_bound", "value": mult_bound})
    evidence.append({"kind": "complex_rank", "value": lc})
    if d == 2:
        ub = 2  # a real quadratic that is not a perfect square has rank 2
        evidence.append({"kind": "quadratic_upper_bound", "value": 2})
    else:
        ub = d - 1  # not hyperbolic, so full real rank is excluded
        evidence.append({"kind": "non_hyperbolic_upper_bound", "value": ub})
    lb = max(tau, mult_bound, lc)
    diagnostics: list[str] = []
    undecided: list[int] = []
    for r in range(lb, ub + 1):
        kb = kernel_at(f, r)
        witness, complete, note = _find_real_sylvester(f, kb, budget)
        if witness is not None:
            lo = undecided[0] if undecided else r
            if lo == r:
                return RankCertificate(
                    claim="real_rank",
                    value=r,
                    witness=witness,
                    witness_real_rooted=True,
                    evidence=tuple(evidence),
                    diagnostics=tuple(diagnostics),
                )
            return RankCertificate(
                claim="real_rank_in",
                lo=lo,
                hi=r,
                witness=witness,
                witness_real_rooted=True,
                evidence=tuple(evidence),
                diagnostics=tuple(diagnostics + [f"witness found at r={r}"]),
            )
        if complete:
            evidence.append({"kind": "no_real_sylvester_at", "r": r, "dim": kb.dim})
        else:
            undecided.append(r)
            diagnostics.append(f"bracket only: {note}")
    if not undecided:
        raise InternalInvariantError(
            "no real Sylvester form found although the upper bound is certified"
        )
    lo, hi = undecided[0], ub
    if lo == hi:
        return RankCertificate(
            claim="real_rank",
            value=lo,
            evidence=tuple(evidence),
            diagnostics=tuple(
                diagnostics + ["bounds determine the value; no witness within budget"]
            ),
        )
    return RankCertificate(
        claim="real_rank_in",
        lo=lo,
        hi=hi,
        evidence=tuple(evidence),
        diagnostics=tuple(diagnostics),
    )


# ---------------------------------------------------------------------------
# small-rank classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Rank3Classification:
    """Field data for a rank-3 form, read off its cubic Sylvester form.

    ``case`` is one of ``case1_cyclic``, ``case2_generic``, ``case3_mixed``,
    ``splits_over_K``, ``not_rank_3``; ``u`` is the discriminant of the
    monic dehomogenized Sylvester form.
    """

    case: str
    u: object
    field_description: str
    unique: bool
    sylvester_form: BinaryForm
    note: str = ""


@dataclass(frozen=True)
class SmallRankResult:
    kind: str  # "rank1" | "rank2" | "rank3" | "other"
    rank: int
    certificate: RankCertificate
    u: object | None = None
    classification: Rank3Classification | None = None


def _sqrt_in_domain(u: Fraction, domain) -> bool:
    """Whether sqrt(u) lies in the (real or imaginary) field tagged by domain."""
    test = is_square_in_q(u)
    if test.is_square:
        return True
    if domain.kind == "quad":
        return test.radicand == domain.radicands[0]
    return False


def _rational_form(h: BinaryForm) -> BinaryForm | None:
    from .scalar import QQ, embed

    try:
        return BinaryForm(h.degree, tuple(embed(c, QQ) for c in h.coeffs))
    except DomainError:
        return None


def classify_small_rank(f: BinaryForm) -> SmallRankResult:
    """Rank-1/2/3 classification with the field datum ``u``.

    Rank 3 runs the cubic classification relative to the coefficient field
    ``K`` of the input: the case is decided by how many roots of the Sylvester
    cubic lie in ``K`` and by whether ``sqrt(u)`` does.  For degree < 5 the
    Sylvester form need not be unique and the result is flagged.
    """
    if f.is_zero() or f.degree == 0:
        raise ValueError("classification needs a nonzero form of degree >= 1")
    r, cert = complex_rank(f)
    if r == 1:
        return SmallRankResult(kind="rank1", rank=1, certificate=cert)
    if r == 2:
        h = cert.witness.monic_first()
        u = discriminant(h)
        return SmallRankResult(kind="rank2", rank=2, certificate=cert, u=u)
    if r != 3:
        return SmallRankResult(kind="other", rank=r, certificate=cert)

    h = cert.witness
    h_rational = _rational_form(h)
    if h_rational is None:
        raise DomainError(
            "rank-3 classification needs a Sylvester form with rational coefficients"
        )
    domain = f.domain
    base = str(domain)
    u = discriminant(h_rational.monic_first())
    shape = rational_and_quadratic_factor(h_rational)
    k_roots = len(shape.linear_factors)  # h is square-free: all multiplicities 1
    note = "" if f.degree >= 5 else "non-unique representation possible"
    quad_cof = None
    if shape.remainder.degree == 2:
        quad_cof = shape.remainder
    elif shape.quadratic_factors:
        quad_cof = shape.quadratic_factors[0][0]
    if quad_cof is not None and domain.kind == "quad":
        # the quadratic cofactor may split over K = Q(sqrt(m)) itself
        if _sqrt_in_domain(discriminant(quad_cof), domain):
            k_roots += 2
    sf = square_free_part(u.numerator * u.denominator)
    if k_roots == 3:
        case = "splits_over_K"
        field = base
    elif k_roots == 1:
        case = "case3_mixed"
        field = f"{base}(sqrt({sf}))"
    elif k_roots == 0:
        if _sqrt_in_domain(u, domain):
            case = "case1_cyclic"
            field = f"{base}(gamma)"
        else:
            case = "case2_generic"
            field = f"{base}(gamma, sqrt({sf}))"
    else:
        raise InternalInvariantError(
            "a cubic over a field cannot have exactly two roots in the field"
        )
    classification = Rank3Classification(
        case=case,
        u=u,
        field_description=field,
        unique=f.degree >= 5,
        sylvester_form=h,
        note=note,
    )
    return SmallRankResult(
        kind="rank3", rank=3, certificate=cert, u=u, classification=classification
    )


@dataclass(frozen=True)
class FullRankFlags:
    complex_full: bool
    real_full: bool

    def label(self) -> str:
        if self.complex_full:
            return "complex_full"
        if self.real_full:
            return "real_full"
        return "neither"


def full_rank_test(f: BinaryForm) -> FullRankFlags:
    """Full complex rank holds exactly for the shape ``l0^(d-1) * l1``; full
    real rank exactly for hyperbolic non-powers."""
    if f.degree < 3:
        raise ValueError("full-rank test needs degree >= 3")
    parts = square_free_decompose(f)
    mults = sorted(m for _, m in parts)
    complex_full = (
        len(parts) == 2
        and mults == [1, f.degree - 1]
        and all(p.degree == 1 for p, _ in parts)
    )
    is_power = len(parts) == 1 and parts[0][0].degree == 1
    real_full = (not is_power) and is_hyperbolic(f)
    return FullRankFlags(complex_full, real_full)


# ---------------------------------------------------------------------------
# the f_lambda family bracket
# ---------------------------------------------------------------------------


def flambda_gap_evidence(k: int, lam) -> list[dict]:
    """Re-derive the forced kernel gap structure of the even family
    ``x^(2k) + C(2k,k) lam x^k y^k + y^(2k)`` level by level.

    For each ``r = k + j`` every kernel vector satisfies ``c_i = 0`` for
    ``j+1 <= i <= k-1`` together with ``c_0 = -lam c_k`` and
    ``c_{k+j} = -lam c_j``; members with nonzero extreme coefficients then
    carry at least ``2*floor((k-j-1)/2)`` non-real roots.
    """
    f = gen_flambda(k, lam)
    records: list[dict] = []
    for j in range(0, k - 1):
        r = k + j
        kb = kernel_at(f, r)
        for b in kb.basis:
            for i in range(j + 1, k):
                if not is_zero(b.coeffs[i]):
                    raise InternalInvariantError(f"expected zero coefficient c_{i} at r={r}")
            if b.coeffs[0] != -1 * lam * b.coeffs[k]:
                raise InternalInvariantError(f"relation c_0 = -lam*c_k failed at r={r}")
            if b.coeffs[k + j] != -1 * lam * b.coeffs[j]:
                raise InternalInvariantError(f"relation c_(k+j) = -lam*c_j failed at r={r}")
        forced = 2 * ((k - j - 1) // 2)
        sampled = 0
        if kb.dim:
            member = _combine(kb.basis, [Fraction(1)] * kb.dim)
            if not is_zero(member.coeffs[0]) and not is_zero(member.coeffs[r]):
                gap = descartes_gap_bound(member)
                if gap < forced:
                    raise InternalInvariantError(
                        f"sampled member gap {gap} below forced bound {forced} at r={r}"
                    )
                sampled = gap
        records.append(
            {
                "kind": "gap_bound",
                "r": r,
                "dim": kb.dim,
                "forced_non_real": forced,
                "sampled_gap": sampled,
            }
        )
    return records


def flambda_real_bracket(k: int, lam) -> tuple[int, int]:
    """The certified real-rank window ``(2k-2, 2k-1)`` for the even family,
    cross-checked against the kernel gap structure."""
    if k < 2:
        raise ValueError("the family bracket needs k >= 2")
    if lam == 0:
        raise ValueError("lambda must be nonzero (otherwise the family degenerates)")
    flambda_gap_evidence(k, lam)
    return (2 * k - 2, 2 * k - 1)


# ---------------------------------------------------------------------------
# certificate re-checking
# ---------------------------------------------------------------------------


def recheck_certificate(f: BinaryForm, cert: RankCertificate) -> bool:
    """Re-verify every re-checkable component of a certificate."""
    for rec in cert.evidence:
        kind = rec.get("kind")
        if kind == "kernel_empty_at":
            if kernel_at(f, rec["r"]).dim != 0:
                return False
        elif kind == "no_squarefree_kernel_at":
            kb = kernel_at(f, rec["r"])
            if kb.dim != rec["dim"] or _find_squarefree_member(f, kb) is not None:
                return False
        elif kind == "tau_bound":
            if real_root_count(f, with_multiplicity=True) != rec["value"]:
                return False
        elif kind == "multiplicity_bound":
            if multiplicity_lower_bound(f) != rec["value"]:
                return False
        elif kind == "complex_rank":
            if complex_rank(f)[0] != rec["value"]:
                return False
    if cert.witness is not None:
        if not apply_diffop(cert.witness, f).is_zero():
            return False
        if not is_square_free_form(cert.witness):
            return False
        if cert.witness_real_rooted:
            if not _is_real_rooted(cert.witness):
                return False
    return True
