"""Exact Waring ranks, certified real-rank bounds, and power-sum
decompositions of binary forms."""

from .scalar import (
    BigApprox,
    DEFAULT_PRECISION,
    Domain,
    DomainError,
    InternalInvariantError,
    QuadExt,
    Rational,
    SquareTest,
    TowerScalar,
    conjugate,
    is_square_in_q,
    quadext,
    scalar_text,
    sqrt_rational,
    square_free_part,
    tower_scalar,
)
from .binform import (
    BinaryForm,
    FactorizationShape,
    descartes_gap_bound,
    discriminant,
    gcd_forms,
    is_hyperbolic,
    is_square_free_form,
    rational_and_quadratic_factor,
    real_root_count,
    resultant_forms,
    square_free_decompose,
)
from .parse import ParseError, parse_form, parse_scalar, render_form
from .apolarity import (
    ApolarPair,
    BinomialView,
    Catalecticant,
    KernelBasis,
    UniquenessReport,
    apolar_generators,
    apply_diffop,
    binomial_view,
    build_catalecticant,
    form_from_binomial,
    kernel,
    kernel_at,
    kernel_uniqueness_check,
)
from .decompose import (
    Decomposition,
    IdentityReport,
    PdFamily,
    Summand,
    VerifyResult,
    decomposition_from_json,
    expand_decomposition,
    extract_decomposition,
    flambda_identity_check,
    gen_flambda,
    gen_pd,
    verify_decomposition,
)
from .rank import (
    FullRankFlags,
    Rank3Classification,
    RankCertificate,
    SearchBudget,
    SmallRankResult,
    classify_small_rank,
    complex_rank,
    flambda_gap_evidence,
    flambda_real_bracket,
    full_rank_test,
    multiplicity_lower_bound,
    real_rank,
    recheck_certificate,
)

__version__ = "0.1.0"
