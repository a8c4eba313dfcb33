"""Exact-arithmetic lambda-ring and symmetric-group representation toolkit.

Everything is computed over the rationals (or integer Laurent
polynomials) with no floating point: symmetric functions in the Schur
basis, big Witt vectors with Adams operations, and a concrete graded
tensor backend where every identity can be re-proved by brute-force
equivariant linear algebra.
"""

from .errors import (
    BoundExceeded,
    GroupMismatch,
    IncompleteClassFunction,
    NonQAlgebra,
    NonUnitConstantTerm,
    NotAComplex,
    NotEndomorphism,
    NotEquivariant,
    SchurforgeError,
    SizeMismatch,
)
from .lambdaring import (
    INTEGER_CONTEXT,
    LAURENT_CONTEXT,
    RATIONAL_CONTEXT,
    LambdaContext,
    UniversalPoly,
    WittSeries,
    adams_on_base,
    adams_on_witt,
    ghost,
    special_check,
    universal_composition_poly,
    universal_product_poly,
    witt_add,
    witt_from_ghosts,
    witt_mul,
    witt_neg,
)
from .laurent import LaurentZ, parse_laurent
from .matrixq import MatrixQ, rank
from .partitions import (
    Partition,
    conjugate,
    dim_poly_eval,
    irrep_dimension,
    partitions_of,
)
from .repring import (
    RDElement,
    aw_check,
    ev,
    euler_xi,
    format_rd,
    g_map,
    h_map,
    induction_product,
    k0_class,
    lambda_of_class,
    lambda_sigma,
    lambda_sigma_direct,
    mu_series,
    schur_complex_class,
    schur_of_class,
)
from .series import (
    Series,
    format_series,
    neg_log_derivative,
    parse_series,
    series_inv,
    series_mul,
)
from .symfunc import (
    SymFunc,
    ch,
    format_symfunc,
    lr,
    mul,
    newton_check,
    omega,
    schur_to_powersum,
    vanishing_schur_sum,
)
from .symgroup import (
    CharacterTable,
    GroupAlgebraElement,
    Permutation,
    character,
    character_table,
    cycle_type,
    irrep_matrices,
    isotypic_projector,
    symmetric_group,
)
from .tensormodel import (
    ComplexObject,
    EquivariantComplex,
    FiniteGroup,
    GObject,
    GradedMap,
    GradedObject,
    categorical_trace,
    char_series,
    cohomology,
    equivariant_kernel,
    gr_dummy,
    gr_truncation,
    parse_graded,
    preset_gobject,
    schur_object,
    sym_action,
    tensor,
    tensor_power_trace,
    trace_schur,
)

__version__ = "0.1.0"
