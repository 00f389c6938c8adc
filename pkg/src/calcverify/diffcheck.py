"""Finite-difference derivative estimates and verification reports.

Central differences verify analytic derivatives; the fundamental-theorem
check F(b) - F(a) against a quadrature value verifies antiderivatives.
The default step h = 1e-4 trades truncation against roundoff well for
smooth functions near unit scale; below h ~ cbrt(eps) the roundoff term
grows again, so h is fixed rather than auto-tuned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError, NumericError
from .quadrature import integrate_1d

DEFAULT_H = 1e-4
DEFAULT_TOL_ABS = 1e-6
DEFAULT_TOL_REL = 1e-6


@dataclass(frozen=True)
class DerivativeReport:
    point: float
    h: float
    analytic: float
    numeric: float
    abs_diff: float
    rel_diff: float
    verdict: str  # "pass" | "fail"


@dataclass(frozen=True)
class AntiderivativeReport:
    a: float
    b: float
    ftc_value: float
    quad_value: float
    n: int
    abs_diff: float
    verdict: str


def _eval_finite(f: Callable[[float], float], x: float) -> float:
    v = f(x)
    if not math.isfinite(v):
        raise NumericError(f"function returned non-finite value {v!r} at {x!r}")
    return v


def central_diff(f: Callable[[float], float], a: float, h: float) -> float:
    """Slope of the secant through (a-h, f(a-h)) and (a+h, f(a+h))."""
    if not h > 0:
        raise DomainError(f"step h must be positive, got {h!r}")
    return (_eval_finite(f, a + h) - _eval_finite(f, a - h)) / (2.0 * h)


def one_sided_diff(f: Callable[[float], float], a: float, h: float) -> float:
    """Secant slope (f(a+h) - f(a)) / h; negative h gives the left secant."""
    if h == 0:
        raise DomainError("step h must be nonzero")
    return (_eval_finite(f, a + h) - _eval_finite(f, a)) / h


def verify_derivative(
    f: Callable[[float], float],
    fprime: Callable[[float], float],
    a: float,
    h: float = DEFAULT_H,
    tol_abs: float = DEFAULT_TOL_ABS,
    tol_rel: float = DEFAULT_TOL_REL,
) -> DerivativeReport:
    """Compare an analytic derivative against the central-difference estimate."""
    numeric = central_diff(f, a, h)
    analytic = _eval_finite(fprime, a)
    abs_diff = abs(analytic - numeric)
    rel_diff = abs_diff / max(abs(analytic), 1.0)
    verdict = "pass" if (abs_diff <= tol_abs or rel_diff <= tol_rel) else "fail"
    return DerivativeReport(
        point=a,
        h=h,
        analytic=analytic,
        numeric=numeric,
        abs_diff=abs_diff,
        rel_diff=rel_diff,
        verdict=verdict,
    )


def verify_antiderivative(
    f: Callable[[float], float],
    antiderivative: Callable[[float], float],
    a: float,
    b: float,
    n: int = 20,
    tol: float = DEFAULT_TOL_ABS,
) -> AntiderivativeReport:
    """Check F(b) - F(a) against the n-point quadrature value of f on [a, b]."""
    if not a < b:
        raise DomainError(f"lower bound {a!r} is not below upper bound {b!r}")
    ftc_value = _eval_finite(antiderivative, b) - _eval_finite(antiderivative, a)
    quad_value = integrate_1d(f, a, b, n)
    abs_diff = abs(ftc_value - quad_value)
    return AntiderivativeReport(
        a=a,
        b=b,
        ftc_value=ftc_value,
        quad_value=quad_value,
        n=n,
        abs_diff=abs_diff,
        verdict="pass" if abs_diff <= tol else "fail",
    )


def gradient(
    f: Callable[..., float],
    point: Sequence[float],
    h: float,
) -> tuple[float, ...]:
    """Forward-difference gradient using exactly d+1 function evaluations.

    All components share one base evaluation f(point); component k uses
    f with only coordinate k bumped by +h.
    """
    if not h > 0:
        raise DomainError(f"step h must be positive, got {h!r}")
    p = tuple(float(v) for v in point)
    if len(p) < 1:
        raise DomainError("point must have at least one coordinate")
    base = f(*p)
    if not math.isfinite(base):
        raise NumericError(f"function returned non-finite value {base!r} at {p!r}")
    out = []
    for k in range(len(p)):
        bumped = p[:k] + (p[k] + h,) + p[k + 1 :]
        v = f(*bumped)
        if not math.isfinite(v):
            raise NumericError(
                f"function returned non-finite value {v!r} bumping coordinate {k}"
            )
        out.append((v - base) / h)
    return tuple(out)


def directional_derivative(
    f: Callable[..., float],
    point: Sequence[float],
    direction: Sequence[float],
    h: float,
) -> float:
    """Gradient estimate dotted with the unit vector along ``direction``."""
    d = tuple(float(v) for v in direction)
    norm = math.hypot(*d)
    if norm == 0.0 or not math.isfinite(norm):
        raise DomainError("direction must have a nonzero finite norm")
    grad = gradient(f, point, h)
    if len(grad) != len(d):
        raise DomainError("direction and point dimensions differ")
    return math.fsum(g * (v / norm) for g, v in zip(grad, d))
