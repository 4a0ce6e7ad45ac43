"""Apolarity machinery: binomial normalization, catalecticant (Hankel)
matrices, exact kernels, differential-operator application, and apolar ideal
generator pairs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .binform import BinaryForm, is_square_free_form, resultant_forms
from .scalar import InternalInvariantError, is_zero

__all__ = [
    "BinomialView",
    "Catalecticant",
    "KernelBasis",
    "ApolarPair",
    "UniquenessReport",
    "binomial_view",
    "form_from_binomial",
    "build_catalecticant",
    "kernel",
    "kernel_at",
    "apply_diffop",
    "apolar_generators",
    "kernel_uniqueness_check",
]


@dataclass(frozen=True)
class BinomialView:
    """Coefficients ``a_i`` with ``f = sum C(d, i) a_i x^(d-i) y^i``."""

    degree: int
    a: tuple

    def __post_init__(self):
        if len(self.a) != self.degree + 1:
            raise ValueError("binomial view length mismatch")


def binomial_view(f: BinaryForm) -> BinomialView:
    d = f.degree
    return BinomialView(d, tuple(c / math.comb(d, i) for i, c in enumerate(f.coeffs)))


def form_from_binomial(view: BinomialView) -> BinaryForm:
    d = view.degree
    return BinaryForm(d, tuple(a * math.comb(d, i) for i, a in enumerate(view.a)))


@dataclass(frozen=True)
class Catalecticant:
    """The ``(d-r+1) x (r+1)`` Hankel matrix with entry ``(s, t) = a_{s+t}``."""

    r: int
    matrix: tuple
    source: BinomialView

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.matrix), len(self.matrix[0]))

    def rows(self) -> list[list]:
        return [list(row) for row in self.matrix]


def build_catalecticant(f: BinaryForm, r: int) -> Catalecticant:
    d = f.degree
    if not 1 <= r <= d:
        raise ValueError(f"target length r={r} out of range 1..{d}")
    view = binomial_view(f)
    matrix = tuple(
        tuple(view.a[s + t] for t in range(r + 1)) for s in range(d - r + 1)
    )
    return Catalecticant(r, matrix, view)


@dataclass(frozen=True)
class KernelBasis:
    """Canonical exact kernel basis; each vector is read as a form of degree
    ``r`` via ``h = sum c_t x^(r-t) y^t``."""

    r: int
    basis: tuple
    dim: int


def _vector_to_form(vec: list, r: int) -> BinaryForm:
    return BinaryForm(r, tuple(vec))


def kernel(cat: Catalecticant) -> KernelBasis:
    """Exact kernel via fraction-free elimination, in reduced echelon normal
    form with each basis form scaled to leading coefficient 1."""
    vectors = linalg.kernel_basis(cat.rows(), cat.r + 1)
    forms = tuple(_vector_to_form(v, cat.r).monic_first() for v in vectors)
    return KernelBasis(cat.r, forms, len(forms))


def kernel_at(f: BinaryForm, r: int) -> KernelBasis:
    return kernel(build_catalecticant(f, r))


def apply_diffop(h: BinaryForm, p: BinaryForm) -> BinaryForm:
    """Apply ``h(d/dx, d/dy)`` to ``p``; bilinear, exact.

    For ``h`` of degree ``k`` and ``p`` of degree ``d >= k`` the result has
    degree ``d - k``.
    """
    k, d = h.degree, p.degree
    if k > d:
        raise ValueError(f"operator degree {k} exceeds form degree {d}")
    out = [Fraction(0)] * (d - k + 1)
    for t, ch in enumerate(h.coeffs):
        if is_zero(ch):
            continue
        for i, cp in enumerate(p.coeffs):
            if is_zero(cp):
                continue
            # d^(k-t)/dx^(k-t) d^t/dy^t applied to x^(d-i) y^i
            if d - i < k - t or i < t:
                continue
            fall_x = math.perm(d - i, k - t)
            fall_y = math.perm(i, t)
            j = i - t  # y-power in the result
            out[j] = out[j] + ch * cp * (fall_x * fall_y)
    return BinaryForm(d - k, tuple(out))


@dataclass(frozen=True)
class ApolarPair:
    """Generator pair of the apolar ideal: degrees sum to ``d + 2`` and the
    generators share no projective zero."""

    g1: BinaryForm
    g2: BinaryForm

    @property
    def degrees(self) -> tuple[int, int]:
        return (self.g1.degree, self.g2.degree)

    def resultant(self):
        return resultant_forms(self.g1, self.g2)


def _minimal_kernel_level(f: BinaryForm) -> tuple[int, KernelBasis]:
    for r in range(1, f.degree + 1):
        kb = kernel_at(f, r)
        if kb.dim > 0:
            return r, kb
    raise InternalInvariantError("no apolar form up to the degree bound")


def apolar_generators(f: BinaryForm) -> ApolarPair:
    """The canonical generator pair of the apolar ideal of ``f``."""
    if f.is_zero():
        raise ValueError("zero form has no apolar generators")
    d = f.degree
    e1, kb = _minimal_kernel_level(f)
    g1 = kb.basis[0]
    e2 = d + 2 - e1
    if e2 > d:
        # f is a power of a linear form: any degree-(d+1) form is apolar.
        candidates = []
        if e1 == 1:
            alpha, beta = -g1.coeffs[1], g1.coeffs[0]  # g1 kills (alpha x + beta y)^d
            candidates.append(BinaryForm.linear(beta, -alpha) ** (d + 1))
        candidates.append(BinaryForm.monomial(d + 1, 0))
        candidates.append(BinaryForm.monomial(d + 1, d + 1))
        candidates.append(BinaryForm.linear(Fraction(1), Fraction(1)) ** (d + 1))
        for cand in candidates:
            if g1.divide_exact(cand) is None and not is_zero(resultant_forms(g1, cand)):
                return ApolarPair(g1, cand.monic_first())
        raise InternalInvariantError("no coprime companion generator found")
    kb2 = kernel_at(f, e2)
    for cand in kb2.basis:
        if cand == g1 and e1 == e2:
            continue
        if cand.divide_exact(g1) is None:
            pair = ApolarPair(g1, cand)
            if is_zero(pair.resultant()):
                continue
            return pair
    raise InternalInvariantError("kernel at complementary degree had no coprime element")


@dataclass(frozen=True)
class UniquenessReport:
    """Kernel dimension report below the uniqueness threshold."""

    status: str  # "empty" | "unique" | "high_dim"
    h: BinaryForm | None
    dim: int


def kernel_uniqueness_check(f: BinaryForm, k: int) -> UniquenessReport:
    """Below ``(d+2)/2`` the kernel is at most a line for non-power forms;
    reports the canonical generator when the line exists."""
    d = f.degree
    if not k * 2 < d + 2:
        raise ValueError(f"uniqueness check needs k < (d+2)/2, got k={k}, d={d}")
    kb = kernel_at(f, k)
    if kb.dim == 0:
        return UniquenessReport("empty", None, 0)
    if kb.dim == 1:
        return UniquenessReport("unique", kb.basis[0], 1)
    return UniquenessReport("high_dim", None, kb.dim)
