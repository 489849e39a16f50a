"""Exact scalars: Q(zeta_m), its prime-field images, and exact linear algebra."""

from .cyclo import CycloScalar, as_scalar, cyclo_arith, cyclotomic_poly, euler_phi
from .linalg import (
    ExactMatrix,
    bareiss_echelon,
    guide_prime,
    mat_column_basis,
    mat_nullspace,
    mat_rank,
    mat_solve,
    same_span,
)
from .modular import (
    DenominatorError,
    ModEchelon,
    ModScalar,
    det_mod_p,
    has_exact_order,
    is_prime,
    primes_one_mod,
    rank_mod_p,
    reduce_mod,
    root_of_unity,
)
