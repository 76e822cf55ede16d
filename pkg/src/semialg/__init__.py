"""Exact-arithmetic toolkit for pointed affine semigroups."""

from .binomials import (
    Binomial,
    GroebnerBasis,
    Reducer,
    TermOrder,
    buchberger,
    eliminate,
    initial_ideal,
    lattice_ideal,
    make_binomial,
    minimalize,
    normal_form,
    saturate_toric,
)
from .errors import (
    InvalidPartition,
    NotCohenMacaulay,
    NotNumerical,
    NotPointed,
    NotSimplicial,
    NotStandardGraded,
    NotSublattice,
    ParseError,
    PartitionNotConic,
    SemialgError,
    TooManyVertices,
    VerificationFailed,
)
from .exact_linalg import (
    LPResult,
    hermite_normal_form,
    in_cone,
    integer_kernel_basis,
    lattice_index,
    lp_feasible,
    positive_functional,
    rank_over_field,
)
from .semigroup import AffineSemigroup, apery_oracle_numerical, convex_partition

__version__ = "0.1.0"
