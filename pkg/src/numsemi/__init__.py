"""Numerical semigroup invariants and exact syzygy-degree identity checks."""

from ._backend import BACKEND
from .errors import (
    BettiMismatch,
    ConsistencyFailure,
    EmptyInput,
    GcdNotOne,
    IdentityViolation,
    InexactDivision,
    InputError,
    InvalidGenerator,
    InvalidQ,
    NonMinimalBasis,
    NotCoprime,
    OrderMismatch,
    ResourceLimit,
    SemigroupError,
    ZeroWq,
)
from .hilbert import (
    HilbertData,
    consistency_check,
    k_polynomial,
    p_polynomial,
    rational_series,
    truncated_hilbert,
)
from .identities import (
    BettiTable,
    IdentityCheck,
    IdentityReport,
    SignedDegreeSequence,
    moment,
    signed_sequence,
    verify_theorem1,
    verify_theorem2,
    verify_theorem2_all,
    w_count,
)
from .limits import Limits
from .polynomial import (
    CyclotomicElement,
    IntPolynomial,
    cyclotomic_poly,
    poly_div_exact,
    poly_eval_int,
    root_power,
)
from .semigroup import (
    AperySet,
    NumericalSemigroup,
    SemigroupProfile,
    apery_set,
    contains,
    new_semigroup,
    profile,
)

__version__ = "0.1.0"
