"""The compiled and pure-Python kernels must agree exactly."""

import random
from fractions import Fraction

import pytest

from skewprod import _kernels
from skewprod.poly import KERNEL_BACKEND

try:
    from skewprod import _speedups
except ImportError:
    _speedups = None


def random_terms(rng, size):
    out = {}
    for _ in range(size):
        key = (rng.randint(0, 10), rng.randint(0, 10))
        c = rng.randint(-20, 20)
        if rng.random() < 0.3:
            c = Fraction(c, rng.randint(1, 9))
        if c:
            out[key] = c
    return out


@pytest.mark.skipif(_speedups is None, reason="compiled kernels unavailable")
def test_backends_agree():
    rng = random.Random(7)
    for _ in range(60):
        a = random_terms(rng, rng.randint(0, 12))
        b = random_terms(rng, rng.randint(0, 12))
        assert _kernels.mul_terms(a, b) == _speedups.mul_terms(a, b)
        assert _kernels.add_terms(a, b) == _speedups.add_terms(a, b)
        if a:
            assert _kernels.scale_terms(a, 3) == _speedups.scale_terms(a, 3)


def test_cancellation_drops_terms():
    a = {(0, 0): 1, (1, 0): 1}
    b = {(0, 0): 1, (1, 0): -1}
    # (1 + z)(1 - z) = 1 - z^2
    assert _kernels.mul_terms(a, b) == {(0, 0): 1, (2, 0): -1}
    assert _kernels.add_terms(a, b) == {(0, 0): 2}
    if _speedups is not None:
        assert _speedups.mul_terms(a, b) == {(0, 0): 1, (2, 0): -1}


def test_backend_reported():
    assert KERNEL_BACKEND in ("pure", "compiled")
