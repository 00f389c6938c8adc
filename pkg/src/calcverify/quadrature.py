"""Gauss-Legendre rules and their application on intervals and boxes.

Weights come from two independent routes: the closed form
w_i = 2 / ((1 - x_i^2) P_n'(x_i)^2) and the Vandermonde moment system
(rows of node powers, right-hand side the monomial moments).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import CapabilityError, DomainError, NumericError
from .legendre import (
    RootSet,
    _horner_exact,
    coerce_nodes,
    exact_coefficients,
    positive_roots_hp,
)

MAX_POINTS = 64
# Monomial Vandermonde systems are ill-conditioned; the closed form is
# authoritative above this cap.
LINEAR_SYSTEM_MAX_POINTS = 20

Integrand = Callable[..., float]


@dataclass(frozen=True)
class QuadratureRule:
    """An n-point rule on [-1, 1]: ascending interior nodes, positive weights."""

    n: int
    nodes: tuple[float, ...]
    weights: tuple[float, ...]


@dataclass(frozen=True)
class Box:
    """Axis-aligned integration domain in 1 to 3 dimensions."""

    lo: tuple[float, ...]
    hi: tuple[float, ...]

    def __post_init__(self) -> None:
        lo = tuple(float(v) for v in self.lo)
        hi = tuple(float(v) for v in self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if len(lo) != len(hi):
            raise DomainError("lo and hi must have the same length")
        if not 1 <= len(lo) <= 3:
            raise DomainError(f"box dimension must be 1..3, got {len(lo)}")
        for k, (a, b) in enumerate(zip(lo, hi)):
            if not (math.isfinite(a) and math.isfinite(b)):
                raise DomainError(f"axis {k}: bounds must be finite")
            if not a < b:
                raise DomainError(f"axis {k}: lower bound {a!r} is not below {b!r}")

    @property
    def dims(self) -> int:
        return len(self.lo)


def _closed_form_weight(n: int, x: Fraction) -> float:
    # w = 2 / ((1 - x^2) P_n'(x)^2), evaluated exactly and rounded once
    _, dcoeffs = exact_coefficients(n)
    d = _horner_exact(dcoeffs, x)
    return float(2 / ((1 - x * x) * d * d))


@lru_cache(maxsize=None)
def _rule_data(n: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    positive = positive_roots_hp(n)
    pos_nodes = [float(x) for x in positive]
    pos_weights = [_closed_form_weight(n, x) for x in positive]
    nodes = [-x for x in reversed(pos_nodes)]
    weights = list(reversed(pos_weights))
    if n % 2 == 1:
        nodes.append(0.0)
        weights.append(_closed_form_weight(n, Fraction(0)))
    nodes.extend(pos_nodes)
    weights.extend(pos_weights)
    return tuple(nodes), tuple(weights)


def gauss_rule(n: int) -> QuadratureRule:
    """n-point Gauss-Legendre rule via the closed-form weights.

    Nodes are the roots of P_n (identical to ``legendre_roots(n)``);
    each weight is the closed form evaluated at the high-precision root,
    so nodes and weights are both correctly rounded doubles.
    """
    if not 1 <= n <= MAX_POINTS:
        raise CapabilityError(f"point count must be in 1..{MAX_POINTS}, got {n}")
    nodes, weights = _rule_data(n)
    return QuadratureRule(n=n, nodes=nodes, weights=weights)


def gauss_weights_linear_system(nodes: RootSet | Sequence[float]) -> tuple[float, ...]:
    """Weights from the moment system V w = m, V[i][j] = nodes[j]^i.

    The right-hand side is the monomial moments 2/(i+1) for even i and 0
    for odd i.  One iterative-refinement step (residual accumulated with
    fsum) recovers the accuracy the Vandermonde conditioning eats.
    """
    xs = coerce_nodes(nodes)
    n = len(xs)
    if n == 0:
        raise DomainError("at least one node is required")
    if n > LINEAR_SYSTEM_MAX_POINTS:
        raise CapabilityError(
            f"linear-system route supports at most {LINEAR_SYSTEM_MAX_POINTS} nodes "
            f"(got {n}); use gauss_rule instead"
        )
    if len(set(xs)) != n:
        raise NumericError("nodes must be distinct (singular moment system)")
    vand = np.vander(np.asarray(xs, dtype=float), increasing=True).T
    moments = np.array([2.0 / (i + 1) if i % 2 == 0 else 0.0 for i in range(n)])
    try:
        w = np.linalg.solve(vand, moments)
        residual = np.array(
            [
                math.fsum(vand[i, j] * w[j] for j in range(n)) - moments[i]
                for i in range(n)
            ]
        )
        w = w - np.linalg.solve(vand, residual)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"moment system is singular: {exc}") from exc
    return tuple(float(v) for v in w)


def _affine_image(f: Integrand, a: float, b: float) -> Callable[[float], float]:
    # maps the integrand onto [-1, 1]; (b - a)/2 is the Jacobian
    jac = (b - a) / 2.0
    mid = (b + a) / 2.0

    def g(x: float) -> float:
        u = jac * x + mid
        v = f(u)
        if not math.isfinite(v):
            raise NumericError(f"integrand returned non-finite value {v!r} at node {u!r}")
        return jac * v

    return g


def apply_rule(rule: QuadratureRule, f: Integrand, a: float, b: float) -> float:
    """Apply an existing rule to the integral of f over [a, b]."""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("bounds must be finite")
    if not a < b:
        raise DomainError(f"lower bound {a!r} is not below upper bound {b!r}")
    g = _affine_image(f, a, b)
    return math.fsum(w * g(x) for x, w in zip(rule.nodes, rule.weights))


def integrate_1d(f: Integrand, a: float, b: float, n: int) -> float:
    """Gauss-Legendre approximation of the integral of f over [a, b].

    Exact (to rounding) for polynomials of degree up to 2n - 1.  The
    endpoints are never evaluated: all nodes are interior.
    """
    return apply_rule(gauss_rule(n), f, a, b)


def apply_rule_box(rule: QuadratureRule, f: Integrand, box: Box) -> float:
    """Tensor-product application of one rule along every axis of a box."""
    axes = []
    for a, b in zip(box.lo, box.hi):
        jac = (b - a) / 2.0
        mid = (b + a) / 2.0
        axes.append([(jac * x + mid, jac * w) for x, w in zip(rule.nodes, rule.weights)])
    terms = []
    for combo in itertools.product(*axes):
        point = tuple(c[0] for c in combo)
        v = f(*point)
        if not math.isfinite(v):
            raise NumericError(f"integrand returned non-finite value {v!r} at node {point!r}")
        terms.append(math.prod(c[1] for c in combo) * v)
    return math.fsum(terms)


def integrate_box(f: Integrand, box: Box, n_per_axis: int) -> float:
    """Integral of f over an axis-aligned box, same order on every axis."""
    return apply_rule_box(gauss_rule(n_per_axis), f, box)


def convergence_table(
    f: Integrand,
    a: float,
    b: float,
    orders: Sequence[int],
    reference: float,
) -> list[tuple[int, float, float]]:
    """Rows (n, value, abs_error) against a supplied reference value."""
    if len(orders) == 0:
        raise DomainError("orders must be nonempty")
    if any(n2 <= n1 for n1, n2 in zip(orders, orders[1:])):
        raise DomainError("orders must be strictly ascending")
    rows = []
    for n in orders:
        value = integrate_1d(f, a, b, n)
        rows.append((n, value, abs(value - reference)))
    return rows
