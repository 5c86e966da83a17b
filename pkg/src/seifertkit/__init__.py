"""Exact computation of Conway polynomials, infinite-cyclic-cover linking
pairings and derived-link invariants from Seifert data."""

from .arith import (
    ConwayPoly,
    LaurentPoly,
    Matrix,
    RationalFunction,
    TruncatedSeries,
    adjugate,
    det,
    series_of_ratfunc,
    to_conway_basis,
)
from .derivation import (
    alpha_equals_beta_check,
    beta,
    beta_via_derivatives,
    derive_class,
    iterated_derivative,
    iterated_derivative_recursive,
    pushoff_linking_vector,
    verify_beta_reduction,
    verify_beta_two_path,
)
from .docformat import ParseError, parse, render_document
from .invariants import (
    alexander_polynomial,
    alpha,
    alpha_matrices,
    alpha_matrix,
    conway_knot,
    conway_link,
    eta_function,
    knot_potential,
    leading_coefficient_check,
    pairing,
    pairing_matrix,
    potential_function,
    taylor_pairing,
    verify_eta_cochran,
    verify_factorization,
    verify_inverse_series,
    verify_taylor_alpha,
    verify_unit_invariance,
)
from .report import Check, VerificationReport
from .seifert import (
    SeifertData,
    SeifertValidationError,
    alexander_matrix,
    full_seifert_matrix,
    intersection_P,
    random_knot_matrix,
    random_seifert_data,
    validate,
)

__version__ = "0.1.0"
