"""Exact computation of Hilbert quasi-polynomials for polynomial rings
graded by positive integer weights, and their quotients by monomial ideals."""

from .grading import (
    RootStructure,
    WeightVector,
    compute_delta,
    compute_delta_r,
    normalize_weights,
    root_structure,
)
from .series import (
    HilbertTable,
    HVector,
    Monomial,
    MonomialIdeal,
    ResourceLimitError,
    colon_by_monomial,
    hilbert_enum_oracle,
    hilbert_quotient,
    hilbert_ring_dp,
    hilbert_ring_recursive,
    hvector,
    weight_divisor_sum,
)
from .quasipoly import (
    QuasiPolynomial,
    RationalPolynomial,
    StructureReport,
    StructureViolationError,
    VerificationError,
    closed_c_k2,
    closed_c_k3,
    closed_leading_coefficient,
    evaluate,
    interpolate_quotient_direct,
    interpolate_ring,
    quotient_from_ring,
    scale_transform,
    structure_report,
)

__version__ = "0.1.0"
