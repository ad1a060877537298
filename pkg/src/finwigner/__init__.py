"""Exact discrete Wigner matrices for finite oscillators.

Everything is computed in exact arithmetic (big rationals, Gaussian
rationals, integer-coefficient polynomials); independent computation
routes cross-check each other all the way from weighted Dyck paths to the
Wigner quasi-probability grid.
"""

from .dyck import (
    DyckPath,
    PathConstraint,
    catalan,
    dyck_poly_enum,
    dyck_poly_rec,
    enumerate_paths,
    gen_series,
    iter_paths,
    lemma_lhs_rhs,
    parse_word,
    restrict_height,
    u_segment_poly,
)
from .errors import (
    CostGuardError,
    DimensionMismatch,
    DomainError,
    DuplicateNodes,
    InvalidWord,
    MissingVariable,
    SingularMatrix,
)
from .matrices import ExactMatrix
from .oscillator import (
    GaugeOperators,
    OscillatorModel,
    SignedSquare,
    gauge_operators,
    krawtchouk,
    momentum_gauge,
    path_transfer_matrix,
    phi_squared,
    position_gauge,
    q_moment,
    q_moment_dyck,
    q_moment_krawtchouk,
    q_moment_matrix,
    transfer_power,
)
from .polynomials import Monomial, MultiPoly
from .scalars import GaussianRational, Rational, decimal_str, rational_from_str, rational_to_str
from .wigner import (
    MarginalReport,
    PreWignerMatrix,
    VandermondeSystem,
    WignerMatrix,
    check_marginals,
    pre_wigner,
    pre_wigner_ground,
    vandermonde_inverse,
    weyl_operator,
    wigner_matrix,
)

__all__ = [
    "CostGuardError",
    "DimensionMismatch",
    "DomainError",
    "DuplicateNodes",
    "DyckPath",
    "ExactMatrix",
    "GaugeOperators",
    "GaussianRational",
    "InvalidWord",
    "MarginalReport",
    "MissingVariable",
    "Monomial",
    "MultiPoly",
    "OscillatorModel",
    "PathConstraint",
    "PreWignerMatrix",
    "Rational",
    "SignedSquare",
    "SingularMatrix",
    "VandermondeSystem",
    "WignerMatrix",
    "catalan",
    "check_marginals",
    "decimal_str",
    "dyck_poly_enum",
    "dyck_poly_rec",
    "enumerate_paths",
    "gauge_operators",
    "gen_series",
    "iter_paths",
    "krawtchouk",
    "lemma_lhs_rhs",
    "momentum_gauge",
    "parse_word",
    "path_transfer_matrix",
    "phi_squared",
    "position_gauge",
    "pre_wigner",
    "pre_wigner_ground",
    "q_moment",
    "q_moment_dyck",
    "q_moment_krawtchouk",
    "q_moment_matrix",
    "rational_from_str",
    "rational_to_str",
    "restrict_height",
    "transfer_power",
    "u_segment_poly",
    "vandermonde_inverse",
    "weyl_operator",
    "wigner_matrix",
]
