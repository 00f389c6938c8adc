"""Numerical calculus verification toolkit.

Gauss-Legendre quadrature constructed from first principles (with the
Legendre polynomials built by two mutually validating routes),
finite-difference verification of derivatives and antiderivatives,
Newton/secant solvers, CORDIC sine/cosine, and a small expression
language feeding all of it from text.
"""

from .cordic import CordicTable, SinCos, cordic_sincos, cordic_table
from .diffcheck import (
    AntiderivativeReport,
    DerivativeReport,
    central_diff,
    directional_derivative,
    gradient,
    one_sided_diff,
    verify_antiderivative,
    verify_derivative,
)
from .errors import (
    CalcVerifyError,
    CapabilityError,
    DomainError,
    NumericError,
    TableError,
)
from .expr import EvalDomainError, Expr, ParseError, as_function, evaluate, parse, to_string
from .legendre import (
    Polynomial,
    RootSet,
    legendre_gram_schmidt,
    legendre_recurrence,
    legendre_roots,
    poly_derivative,
    poly_eval,
)
from .quadrature import (
    Box,
    QuadratureRule,
    apply_rule,
    apply_rule_box,
    convergence_table,
    gauss_rule,
    gauss_weights_linear_system,
    integrate_1d,
    integrate_box,
)
from .solvers import SolveResult, newton_solve, secant_solve
from .tables import default_cache_path, get_or_build, load_tables, save_tables

__version__ = "0.1.0"

__all__ = [
    "AntiderivativeReport",
    "Box",
    "CalcVerifyError",
    "CapabilityError",
    "CordicTable",
    "DerivativeReport",
    "DomainError",
    "EvalDomainError",
    "Expr",
    "NumericError",
    "ParseError",
    "Polynomial",
    "QuadratureRule",
    "RootSet",
    "SinCos",
    "SolveResult",
    "TableError",
    "apply_rule",
    "apply_rule_box",
    "as_function",
    "central_diff",
    "convergence_table",
    "cordic_sincos",
    "cordic_table",
    "default_cache_path",
    "directional_derivative",
    "evaluate",
    "gauss_rule",
    "gauss_weights_linear_system",
    "get_or_build",
    "gradient",
    "integrate_1d",
    "integrate_box",
    "legendre_gram_schmidt",
    "legendre_recurrence",
    "legendre_roots",
    "load_tables",
    "newton_solve",
    "one_sided_diff",
    "parse",
    "poly_derivative",
    "poly_eval",
    "save_tables",
    "secant_solve",
    "to_string",
    "verify_antiderivative",
    "verify_derivative",
]
