import math
import random

import pytest

from calcverify import (
    Box,
    CapabilityError,
    DomainError,
    NumericError,
    convergence_table,
    gauss_rule,
    gauss_weights_linear_system,
    integrate_1d,
    integrate_box,
    legendre_roots,
)


def test_rule_examples():
    r1 = gauss_rule(1)
    assert r1.nodes == (0.0,) and r1.weights == (2.0,)
    r2 = gauss_rule(2)
    assert r2.nodes[1] == pytest.approx(1 / math.sqrt(3), abs=1e-15)
    assert r2.weights == (1.0, 1.0)
    r3 = gauss_rule(3)
    assert r3.nodes[2] == pytest.approx(math.sqrt(3 / 5), abs=1e-15)
    # closed-form weights at the P_3 roots match the 3x3 moment system by hand
    assert r3.weights == (5 / 9, 8 / 9, 5 / 9)


def test_rule_matches_legendre_roots():
    for n in (1, 2, 5, 12, 33, 64):
        assert gauss_rule(n).nodes == legendre_roots(n).roots


@pytest.mark.parametrize("n", list(range(1, 65)))
def test_rule_invariants(n):
    rule = gauss_rule(n)
    assert abs(math.fsum(rule.weights) - 2.0) <= 1e-12
    assert abs(math.fsum(w * x for w, x in zip(rule.weights, rule.nodes))) <= 1e-12
    assert all(w > 0 for w in rule.weights)
    for i in range(n):
        assert abs(rule.weights[i] - rule.weights[n - 1 - i]) <= 1e-12
    for a, b in zip(rule.nodes, rule.nodes[1:]):
        assert a < b
    assert rule.nodes[0] > -1.0 and rule.nodes[-1] < 1.0


def test_rule_range_errors():
    with pytest.raises(CapabilityError):
        gauss_rule(0)
    with pytest.raises(CapabilityError):
        gauss_rule(65)


def test_linear_system_examples():
    # hand solve of the 3x3 moment system for {-1, 0, 1}: Simpson weights,
    # not the {2/3, 4/3, 2/3} sometimes quoted for these nodes (those break
    # the first moment equation w1 + w2 + w3 = 2)
    w = gauss_weights_linear_system([-1.0, 0.0, 1.0])
    assert w == pytest.approx((1 / 3, 4 / 3, 1 / 3), abs=1e-14)
    assert gauss_weights_linear_system([0.0]) == (2.0,)
    s = 1 / math.sqrt(3)
    assert gauss_weights_linear_system([-s, s]) == pytest.approx((1.0, 1.0), abs=1e-14)


def test_linear_system_errors():
    with pytest.raises(NumericError):
        gauss_weights_linear_system([0.5, 0.5])
    with pytest.raises(CapabilityError):
        gauss_weights_linear_system([k / 22.0 for k in range(21)])
    with pytest.raises(DomainError):
        gauss_weights_linear_system([])


def test_route_equivalence_to_20():
    for n in range(1, 21):
        closed = gauss_rule(n).weights
        system = gauss_weights_linear_system(legendre_roots(n))
        for a, b in zip(closed, system):
            assert abs(a - b) <= 1e-10


def test_integrate_examples():
    assert abs(integrate_1d(lambda x: x**5, -1.0, 1.0, 3)) <= 1e-14
    improper = integrate_1d(lambda x: 1.0 / math.sqrt(x), 0.0, 1.0, 40)
    assert improper == pytest.approx(1.9785, abs=5e-4)
    # antiderivative x^3/3 on [0, 2]; degree 2 <= 2n-1 = 3 so the rule is exact
    assert integrate_1d(lambda x: x * x, 0.0, 2.0, 2) == pytest.approx(8 / 3, rel=1e-14)


def test_integrate_errors():
    with pytest.raises(DomainError):
        integrate_1d(lambda x: x, 1.0, 1.0, 4)
    with pytest.raises(DomainError):
        integrate_1d(lambda x: x, 2.0, -1.0, 4)
    with pytest.raises(NumericError) as info:
        integrate_1d(lambda x: float("inf"), 0.0, 1.0, 4)
    assert "node" in str(info.value)
    with pytest.raises(NumericError):
        integrate_1d(lambda x: float("nan"), 0.0, 1.0, 4)


def test_exactness_through_degree():
    for n in range(1, 13):
        for k in range(2 * n):
            value = integrate_1d(lambda x, k=k: x**k, -1.0, 1.0, n)
            if k % 2 == 0:
                exact = 2.0 / (k + 1)
                assert abs(value - exact) <= 1e-11 * exact
            else:
                assert abs(value) <= 1e-11


def test_non_exactness_boundary():
    # an n-point rule is degree 2n-1 exact, not higher
    for n in range(1, 7):
        value = integrate_1d(lambda x, p=2 * n: x**p, -1.0, 1.0, n)
        assert abs(value - 2.0 / (2 * n + 1)) > 1e-8


def test_affine_consistency_same_arithmetic():
    cases = [
        (math.exp, 0.3, 2.7, 7),
        (lambda x: 1.0 / (1.0 + x * x), -2.0, 5.0, 11),
        (math.cos, -0.1, 0.2, 4),
    ]
    for f, a, b, n in cases:
        jac = (b - a) / 2.0
        mid = (b + a) / 2.0

        def g(x, f=f, jac=jac, mid=mid):
            return jac * f(jac * x + mid)

        assert integrate_1d(f, a, b, n) == integrate_1d(g, -1.0, 1.0, n)


def test_endpoint_avoidance():
    for a, b in [(-1.0, 1.0), (0.0, 1.0), (2.0, 7.5), (-3.25, -0.5)]:
        jac = (b - a) / 2.0
        mid = (b + a) / 2.0
        for n in range(1, 65):
            for x in gauss_rule(n).nodes:
                u = jac * x + mid
                assert u != a and u != b


def test_box_examples():
    assert integrate_box(lambda x, y: 1.0, Box((0, 0), (1, 1)), 1) == pytest.approx(1.0, abs=1e-15)
    # separable product of two 1-D integrals: (1/2) * (1/2)
    assert integrate_box(lambda x, y: x * y, Box((0, 0), (1, 1)), 2) == pytest.approx(0.25, abs=1e-13)
    # 2 * (2/3) * 2 by symmetry of the two quadratic terms
    v = integrate_box(lambda x, y: x * x + y * y, Box((-1, -1), (1, 1)), 2)
    assert v == pytest.approx(8 / 3, rel=1e-14)


def test_box_three_dimensions():
    v = integrate_box(lambda x, y, z: x * y * z, Box((0, 0, 0), (1, 1, 1)), 3)
    assert v == pytest.approx(1 / 8, rel=1e-13)


def test_box_validation():
    with pytest.raises(DomainError):
        Box((0, 0, 0, 0), (1, 1, 1, 1))
    with pytest.raises(DomainError):
        Box((), ())
    with pytest.raises(DomainError):
        Box((0, 1), (1, 1))
    with pytest.raises(DomainError):
        Box((0,), (1, 2))
    with pytest.raises(DomainError):
        Box((0, float("inf")), (1, 2))
    assert Box((0, 0), (1, 2)).dims == 2


def test_box_integrand_errors():
    with pytest.raises(NumericError):
        integrate_box(lambda x, y: float("nan"), Box((0, 0), (1, 1)), 2)
    with pytest.raises(CapabilityError):
        integrate_box(lambda x, y: 1.0, Box((0, 0), (1, 1)), 65)


def test_separability():
    rng = random.Random(20240831)
    for _ in range(50):
        a1, a2 = rng.uniform(0.5, 1.5), rng.uniform(0.5, 1.5)
        b1, b2 = rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)
        c1, c2 = rng.uniform(1.0, 2.0), rng.uniform(1.0, 2.0)
        lo = (rng.uniform(-2.0, 0.0), rng.uniform(-2.0, 0.0))
        hi = (lo[0] + rng.uniform(0.5, 2.0), lo[1] + rng.uniform(0.5, 2.0))

        def g(x, a=a1, b=b1, c=c1):
            return a * math.exp(b * x) + c

        def h(y, a=a2, b=b2, c=c2):
            return a * math.exp(b * y) + c

        box_value = integrate_box(lambda x, y: g(x) * h(y), Box(lo, hi), 8)
        product = integrate_1d(g, lo[0], hi[0], 8) * integrate_1d(h, lo[1], hi[1], 8)
        assert abs(box_value - product) <= 1e-12 * abs(product)


def test_convergence_table():
    reference = math.e - 1.0 / math.e
    rows = convergence_table(math.exp, -1.0, 1.0, [2, 4, 8], reference)
    assert [n for n, _, _ in rows] == [2, 4, 8]
    errs = [err for _, _, err in rows]
    assert errs[0] > errs[1] > errs[2]

    rows = convergence_table(lambda x: x**3, -1.0, 1.0, [2], 0.0)
    assert rows[0][2] <= 1e-14

    rows = convergence_table(lambda x: 1.0 / math.sqrt(x), 0.0, 1.0, [10, 20, 40], 2.0)
    errs = [err for _, _, err in rows]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] == pytest.approx(0.0215, abs=5e-4)


def test_convergence_table_validation():
    with pytest.raises(DomainError):
        convergence_table(math.exp, 0.0, 1.0, [], 1.0)
    with pytest.raises(DomainError):
        convergence_table(math.exp, 0.0, 1.0, [4, 2], 1.0)
