import math

import numpy as np
import pytest
from scipy import integrate

from dirac_rdi.quadrature import (GAUSS_WEIGHTS, KRONROD_WEIGHTS, NODES, QuadratureError,
                                  gauss_kronrod, integrate_from_zero)


def test_rule_weights_integrate_constants():
    assert KRONROD_WEIGHTS.sum() == pytest.approx(2.0, abs=1e-15)
    assert GAUSS_WEIGHTS.sum() == pytest.approx(2.0, abs=1e-15)
    assert len(NODES) == 15


@pytest.mark.parametrize("fn, lo, hi", [
    (np.sin, 0.0, 7.0),
    (lambda s: np.exp(-s * s), -2.0, 3.0),
    (lambda s: 1.0 / (1.0 + 25 * s * s), -1.0, 1.0),
    (lambda s: np.cos(30 * s) * np.exp(s), 0.0, 2.0),
])
def test_matches_scipy_quad(fn, lo, hi):
    ref, _ = integrate.quad(fn, lo, hi, epsabs=1e-13, epsrel=1e-12, limit=200)
    assert gauss_kronrod(fn, lo, hi) == pytest.approx(ref, rel=1e-11, abs=1e-13)


def test_vector_integrand_and_reversed_limits():
    fn = lambda s: np.array([np.sin(s), np.cos(s)])
    np.testing.assert_allclose(gauss_kronrod(fn, 0.0, 1.0), [1 - math.cos(1), math.sin(1)], rtol=1e-13)
    np.testing.assert_allclose(integrate_from_zero(fn, -1.0), [1 - math.cos(1), -math.sin(1)], rtol=1e-13)


def test_integral_is_differentiable_in_its_upper_limit():
    from dirac_rdi.dual import derivative
    d = derivative(lambda u: integrate_from_zero(np.cos, u), 0.8)
    assert d == pytest.approx(math.cos(0.8), rel=1e-12)


def test_zero_width_interval():
    assert integrate_from_zero(np.exp, 0.0) == 0.0


def test_panel_budget_exhausted():
    with pytest.raises(QuadratureError):
        gauss_kronrod(lambda s: np.sin(1.0 / s), 1e-6, 1.0, max_panels=5)


def test_cancelling_integral_converges():
    # int_0^{2 pi} sin = 0; the tolerance is measured against int |sin| = 4
    val = gauss_kronrod(np.sin, 0.0, 2.0 * np.pi)
    assert abs(val) < 1e-12
