"""Janet and Pommaret bases over Q with syzygy and Hilbert-driven pruning."""

from .divisions import (
    JANET,
    POMMARET,
    division_by_name,
    involutive_divisor,
    is_head_autoreduced,
    janet_multiplicative,
    mono_class,
    pommaret_multiplicative,
)
from .engine import (
    DegreeCapExceeded,
    hilbert_driven_basis,
    involutive_basis,
    involutive_reduce,
    is_involutive_basis,
    is_minimal_basis,
)
from .groebner import (
    groebner_basis,
    ideal_equal,
    is_groebner_basis,
    lm_ideal_equal,
    normal_form,
    plain_buchberger,
)
from .hilbert import HilbertFunction, brute_force_hf, involutive_hf
from .parsing import ParseError, format_system, parse_poly, parse_system
from .poly import (
    DEGREVLEX,
    LEX,
    DimensionError,
    DivisionError,
    Ordering,
    PolyRing,
    Polynomial,
    ZeroPolynomialError,
    homogenize,
)
from .quasistable import (
    ChangeLog,
    LinearChange,
    PositionSearchError,
    PositionVerdict,
    apply_change,
    check_position,
    find_quasi_stable_position,
    is_quasi_stable,
    pommaret_basis,
    replay_changes,
)
from .stats import RunStats

__version__ = "0.1.0"

__all__ = [
    "ChangeLog",
    "DEGREVLEX",
    "DegreeCapExceeded",
    "DimensionError",
    "DivisionError",
    "HilbertFunction",
    "JANET",
    "LEX",
    "LinearChange",
    "Ordering",
    "ParseError",
    "PolyRing",
    "Polynomial",
    "PositionSearchError",
    "PositionVerdict",
    "POMMARET",
    "RunStats",
    "ZeroPolynomialError",
    "apply_change",
    "brute_force_hf",
    "check_position",
    "division_by_name",
    "find_quasi_stable_position",
    "format_system",
    "groebner_basis",
    "hilbert_driven_basis",
    "homogenize",
    "ideal_equal",
    "involutive_basis",
    "involutive_divisor",
    "involutive_hf",
    "involutive_reduce",
    "is_groebner_basis",
    "is_head_autoreduced",
    "is_involutive_basis",
    "is_minimal_basis",
    "is_quasi_stable",
    "janet_multiplicative",
    "lm_ideal_equal",
    "mono_class",
    "normal_form",
    "parse_poly",
    "parse_system",
    "plain_buchberger",
    "pommaret_basis",
    "pommaret_multiplicative",
    "replay_changes",
]
