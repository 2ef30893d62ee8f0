from .scalar import (
    ALPHABET,
    GREEK,
    LATIN,
    ONE,
    ZERO,
    DivisionByZero,
    Scalar,
    ScalarParseError,
    as_scalar,
    format_scalar,
    parse_scalar,
    scalar_arith,
)
from .denominator import Denominator
from .laurent import (
    ArityMismatch,
    LaurentPoly,
    NotDivisible,
    coefficient_of,
    format_laurent,
    laurent_arith,
    laurent_divide_exact,
)
from .substitution import (
    CHANGE_OF_VARIABLES,
    Substitution,
    SubstitutionSingular,
    numeric_point,
    q_one,
    substitute_params,
)
