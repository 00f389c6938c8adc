"""Legendre polynomials built by two independent routes.

The Gram-Schmidt route orthogonalizes the monomials 1, x, x^2, ... under
the L2 inner product on [-1, 1]; the recurrence route applies the
three-term recurrence (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.  Each
route serves as an oracle for the other.  Both are carried out in exact
rational arithmetic and rounded to floats only at the API boundary, so
the emitted coefficients are correctly rounded regardless of degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import CapabilityError, DomainError, NumericError

# Monomial Gram-Schmidt is kept within a documented degree cap; the
# recurrence route is authoritative beyond it.
GRAM_SCHMIDT_MAX_DEGREE = 64

_NEWTON_MAX_ITERS = 100
_NEWTON_STEP_TOL = 1e-15

# Roots are polished to this fixed-point precision (~36 digits) so that
# downstream quantities (the closed-form weights in particular) round
# correctly to double precision.
_HP_SCALE = 1 << 120


@dataclass(frozen=True)
class Polynomial:
    """Dense real polynomial; ``coeffs[i]`` multiplies ``x**i``.

    The trailing coefficient is nonzero unless the polynomial is
    identically zero (represented as a single zero coefficient).
    """

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        cs = tuple(float(c) for c in self.coeffs)
        while len(cs) > 1 and cs[-1] == 0.0:
            cs = cs[:-1]
        if not cs:
            cs = (0.0,)
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


class RootSet(NamedTuple):
    """Roots of a Legendre polynomial, sorted ascending, all in (-1, 1)."""

    roots: tuple[float, ...]
    n: int


def poly_eval(p: Polynomial, x: float) -> float:
    """Evaluate ``p`` at ``x`` by Horner's scheme."""
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(p: Polynomial) -> Polynomial:
    """Termwise derivative of ``p``."""
    if p.degree == 0:
        return Polynomial((0.0,))
    return Polynomial(tuple((i + 1) * c for i, c in enumerate(p.coeffs[1:])))


def _moment(m: int) -> Fraction:
    # integral of x^m over [-1, 1]
    return Fraction(2, m + 1) if m % 2 == 0 else Fraction(0)


def _inner_monomial(k: int, q: list[Fraction]) -> Fraction:
    # <x^k, q> under the L2 inner product on [-1, 1]
    return sum((c * _moment(i + k) for i, c in enumerate(q)), Fraction(0))


def _gram_schmidt_exact(n: int) -> list[list[Fraction]]:
    basis: list[list[Fraction]] = []
    norms: list[Fraction] = []
    for k in range(n + 1):
        v = [Fraction(0)] * (k + 1)
        v[k] = Fraction(1)
        # project x^k onto each already-orthogonal predecessor
        for u, uu in zip(basis, norms):
            coef = _inner_monomial(k, u) / uu
            if coef:
                for i, c in enumerate(u):
                    v[i] -= coef * c
        scale = sum(v)  # value at x = 1
        v = [c / scale for c in v]
        basis.append(v)
        norms.append(
            sum(
                (a * b * _moment(i + j) for i, a in enumerate(v) for j, b in enumerate(v)),
                Fraction(0),
            )
        )
    return basis


def _recurrence_exact(n: int) -> list[list[Fraction]]:
    polys = [[Fraction(1)]]
    if n >= 1:
        polys.append([Fraction(0), Fraction(1)])
    for k in range(1, n):
        pk, pkm1 = polys[k], polys[k - 1]
        nxt = [Fraction(0)] * (k + 2)
        for i, c in enumerate(pk):
            nxt[i + 1] += Fraction(2 * k + 1, k + 1) * c
        for i, c in enumerate(pkm1):
            nxt[i] -= Fraction(k, k + 1) * c
        polys.append(nxt)
    return polys[: n + 1]


def _to_polynomials(exact: list[list[Fraction]]) -> list[Polynomial]:
    return [Polynomial(tuple(float(c) for c in p)) for p in exact]


def legendre_gram_schmidt(n: int) -> list[Polynomial]:
    """P_0..P_n via Gram-Schmidt on the monomial basis, P_k(1) = 1.

    Inner products use the exact monomial integrals (2/(m+1) for even m,
    0 for odd m), never quadrature.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if n > GRAM_SCHMIDT_MAX_DEGREE:
        raise CapabilityError(
            f"Gram-Schmidt route supports degree <= {GRAM_SCHMIDT_MAX_DEGREE} "
            f"(got {n}); use legendre_recurrence instead"
        )
    return _to_polynomials(_gram_schmidt_exact(n))


def legendre_recurrence(n: int) -> list[Polynomial]:
    """P_0..P_n via the three-term recurrence."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    return _to_polynomials(_recurrence_exact(n))


def legendre_value(n: int, x: float) -> float:
    """P_n(x) by the value recurrence (stable at any degree)."""
    if n == 0:
        return 1.0
    prev, cur = 1.0, x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1) * x * cur - k * prev) / (k + 1)
    return cur


def legendre_value_and_derivative(n: int, x: float) -> tuple[float, float]:
    """(P_n(x), P_n'(x)) by the value recurrence."""
    if n == 0:
        return 1.0, 0.0
    prev, cur = 1.0, x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1) * x * cur - k * prev) / (k + 1)
    if x == 1.0 or x == -1.0:
        d = 0.5 * n * (n + 1)
        if x < 0.0 and n % 2 == 0:
            d = -d
        return cur, d
    return cur, n * (x * cur - prev) / (x * x - 1.0)


def _newton_root(n: int, guess: float) -> float:
    x = guess
    for _ in range(_NEWTON_MAX_ITERS):
        p, d = legendre_value_and_derivative(n, x)
        if d == 0.0:
            break
        step = p / d
        x -= step
        if abs(step) <= _NEWTON_STEP_TOL:
            return x
    raise NumericError(
        f"Newton iteration for the degree-{n} root did not converge "
        f"from initial guess {guess!r}"
    )


@lru_cache(maxsize=None)
def exact_coefficients(n: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Exact rational coefficients of (P_n, P_n')."""
    p = _recurrence_exact(n)[n]
    d = tuple((i + 1) * c for i, c in enumerate(p[1:])) or (Fraction(0),)
    return tuple(p), d


def _horner_exact(coeffs: tuple[Fraction, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def positive_roots_hp(n: int) -> tuple[Fraction, ...]:
    """Ascending positive roots of P_n to ~36 significant digits.

    Float Newton (initial guesses cos(pi (4k-1) / (4n+2))) lands within
    an ulp; one exact Newton step in rational arithmetic then squares
    the accuracy far past double precision.
    """
    pcoeffs, dcoeffs = exact_coefficients(n)
    out = []
    for k in range(1, n // 2 + 1):
        x = _newton_root(n, math.cos(math.pi * (4 * k - 1) / (4 * n + 2)))
        xq = Fraction(x)
        xq -= _horner_exact(pcoeffs, xq) / _horner_exact(dcoeffs, xq)
        out.append(Fraction(round(xq * _HP_SCALE), _HP_SCALE))
    out.sort()
    return tuple(out)


def legendre_roots(n: int) -> RootSet:
    """All n roots of P_n, ascending.

    Only the positive half is computed; the negative half is mirrored
    and an exact zero is inserted for odd n, so symmetry holds
    structurally.
    """
    if n < 1:
        raise DomainError("root count must be a positive integer")
    positive = [float(x) for x in positive_roots_hp(n)]
    roots = [-r for r in reversed(positive)]
    if n % 2 == 1:
        roots.append(0.0)
    roots.extend(positive)
    return RootSet(roots=tuple(roots), n=n)


def analytic_inner_product(p: Polynomial, q: Polynomial) -> float:
    """Integral of p*q over [-1, 1] from coefficients (exact moments)."""
    terms = []
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            if (i + j) % 2 == 0:
                terms.append(a * b * (2.0 / (i + j + 1)))
    return math.fsum(terms)


def coerce_nodes(nodes: RootSet | Sequence[float]) -> tuple[float, ...]:
    """Accept a RootSet or any sequence of abscissas."""
    if isinstance(nodes, RootSet):
        return nodes.roots
    return tuple(float(x) for x in nodes)
