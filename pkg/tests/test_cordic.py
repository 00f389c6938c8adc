import math
import random

import pytest

from calcverify import CapabilityError, DomainError, cordic_sincos, cordic_table
from calcverify.cordic import pseudo_rotate


def test_table_single_iteration():
    table = cordic_table(1)
    assert table.angles == (math.pi / 4,)
    assert table.gain == pytest.approx(1 / math.sqrt(2), abs=1e-16)


def test_table_two_iterations():
    table = cordic_table(2)
    assert table.angles == (math.pi / 4, math.atan(0.5))
    # hand expansion of the product: 1 / (sqrt(2) * sqrt(5/4))
    assert table.gain == pytest.approx(1 / (math.sqrt(2) * math.sqrt(1.25)), abs=1e-15)


def test_table_forty_iterations():
    # direct product evaluation as the oracle
    expected = 1.0
    for k in range(40):
        expected *= 1.0 / math.sqrt(1.0 + 4.0 ** (-k))
    table = cordic_table(40)
    assert abs(table.gain - 0.6072529350088813) <= 1e-12
    assert table.gain == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("iters", [16, 40, 60])
def test_table_invariants(iters):
    table = cordic_table(iters)
    assert table.iters == iters and len(table.angles) == iters
    for a, b in zip(table.angles, table.angles[1:]):
        assert a > b
    assert 0.607252 < table.gain < 0.607254


def test_table_range_errors():
    with pytest.raises(CapabilityError):
        cordic_table(0)
    with pytest.raises(CapabilityError):
        cordic_table(61)


def test_sincos_basic_angles():
    table = cordic_table(40)
    tol = 2.0 ** (-38)
    sc = cordic_sincos(0.0, table)
    assert abs(sc.sin - 0.0) <= tol and abs(sc.cos - 1.0) <= tol
    sc = cordic_sincos(math.pi / 2, table)
    assert abs(sc.sin - 1.0) <= tol and abs(sc.cos - 0.0) <= tol
    sc = cordic_sincos(math.pi / 6, table)
    assert abs(sc.sin - 0.5) <= 1e-10


def test_sincos_uses_default_table():
    assert cordic_sincos(0.3) == cordic_sincos(0.3, cordic_table(40))


def test_pythagorean_identity():
    table = cordic_table(40)
    rng = random.Random(902)
    bound = 4.0 * 2.0 ** (-40)
    for _ in range(1000):
        sc = cordic_sincos(rng.uniform(-10, 10), table)
        assert abs(sc.sin * sc.sin + sc.cos * sc.cos - 1.0) <= bound


def test_odd_even_symmetry():
    table = cordic_table(40)
    tol = 2.0 ** (-38)
    rng = random.Random(903)
    for _ in range(300):
        t = rng.uniform(-10, 10)
        plus = cordic_sincos(t, table)
        minus = cordic_sincos(-t, table)
        assert abs(minus.sin + plus.sin) <= tol
        assert abs(minus.cos - plus.cos) <= tol


def test_error_halves_per_iteration():
    rng = random.Random(904)
    samples = [rng.uniform(-10, 10) for _ in range(1000)]
    previous = None
    for iters in range(8, 31):
        table = cordic_table(iters)
        worst = 0.0
        for t in samples:
            sc = cordic_sincos(t, table)
            worst = max(worst, abs(sc.sin - math.sin(t)), abs(sc.cos - math.cos(t)))
        if previous is not None:
            assert previous / worst >= 1.9
        previous = worst


def test_domain_errors():
    for bad in (float("inf"), float("nan"), 1e20, -2e15):
        with pytest.raises(DomainError):
            cordic_sincos(bad)


class TrapFloat(float):
    """Float that refuses general multiplication and division."""

    def __mul__(self, other):
        raise AssertionError("multiplication inside the CORDIC loop")

    __rmul__ = __mul__

    def __truediv__(self, other):
        raise AssertionError("division inside the CORDIC loop")

    __rtruediv__ = __truediv__

    def __add__(self, other):
        return TrapFloat(float.__add__(self, float(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return TrapFloat(float.__sub__(self, float(other)))

    def __rsub__(self, other):
        return TrapFloat(float.__sub__(float(other), self))

    def __neg__(self):
        return TrapFloat(float.__neg__(self))


def test_rotation_loop_is_shift_and_add_only():
    with pytest.raises(AssertionError):
        TrapFloat(2.0) * 3.0  # the trap itself works

    table = cordic_table(40)
    theta = 0.8765
    x, y, z = pseudo_rotate(
        TrapFloat(table.gain), TrapFloat(0.0), TrapFloat(theta), table.angles
    )
    assert abs(y - math.sin(theta)) <= 2.0 ** (-38)
    assert abs(x - math.cos(theta)) <= 2.0 ** (-38)
    assert abs(z) <= 2.0 ** (-38)
