import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dirac_rdi.dual import (Dual, derivative, nth_derivative, partials, primal, second_derivative,
                            stack, value_and_derivative)

finite = st.floats(-3.0, 3.0, allow_nan=False)


@given(finite)
def test_polynomial_derivative(x):
    assert derivative(lambda s: s ** 3 - 2 * s, x) == pytest.approx(3 * x * x - 2, abs=1e-12)


@given(finite)
def test_transcendental_derivatives(x):
    d = derivative(lambda s: np.sin(s) * np.exp(s) + np.arctan(s), x)
    expected = math.cos(x) * math.exp(x) + math.sin(x) * math.exp(x) + 1 / (1 + x * x)
    assert d == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_nested_derivatives_do_not_confuse_perturbations():
    assert derivative(lambda x: x * derivative(lambda y: x + y, 1.0), 1.0) == 1.0


def test_higher_derivatives():
    assert second_derivative(np.sin, 0.3) == pytest.approx(-math.sin(0.3), rel=1e-14)
    assert nth_derivative(np.exp, 0.7, 4) == pytest.approx(math.exp(0.7), rel=1e-14)
    assert nth_derivative(lambda s: s ** 5, 2.0, 3) == pytest.approx(60 * 4.0)


def test_matrix_valued_functions():
    M = np.array([[1.0, 2.0], [0.5, -1.0]])
    d = derivative(lambda s: (s * M) @ (s * M), 0.5)
    np.testing.assert_allclose(d, 2 * 0.5 * M @ M, atol=1e-14)


def test_partials_of_a_field():
    val, grads = partials(lambda c: c[0] * c[1] ** 2 + np.cos(c[2]), [1.0, 2.0, 0.4])
    assert val == pytest.approx(4.0 + math.cos(0.4))
    assert grads == pytest.approx([4.0, 4.0, -math.sin(0.4)])


def test_value_and_derivative_and_primal():
    v, d = value_and_derivative(lambda s: s * s, 3.0)
    assert (v, d) == (9.0, 6.0)
    assert primal(Dual(Dual(1.5, 1.0, 1), 0.0, 2)) == 1.5


def test_stack_keeps_tangents():
    d = derivative(lambda s: stack([s, 2 * s, 1.0]), 0.1)
    np.testing.assert_allclose(d, [1.0, 2.0, 0.0])


def test_dual_refuses_silent_array_conversion():
    with pytest.raises(TypeError):
        np.array([Dual(1.0, 1.0, 99)], dtype=float)


def test_complex_and_sqrt():
    d = derivative(lambda s: np.sqrt(s) * (1 + 2j), 4.0)
    assert d == pytest.approx(0.25 * (1 + 2j))
