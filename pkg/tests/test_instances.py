import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dirac_rdi import rdi
from dirac_rdi.dual import derivative, primal, second_derivative
from dirac_rdi.errors import DomainError
from dirac_rdi.solutions import instances, volkov
from dirac_rdi.verify.fields import maxwell_sources

P = instances.CircleParams(a0=0.4, eB=0.7, omega=0.6)


def arr(v):
    return np.asarray(primal(v))


def test_circle_column_matches_closed_form(rng):
    spec = instances.redmond_circle(P)
    for x in rng.uniform(-2, 2, (20, 4)):
        np.testing.assert_allclose(arr(volkov.volkov_spinor(spec, x)),
                                   arr(instances.circle_column_closed_form(P, x)), atol=1e-14)


def test_circle_observables_match_closed_form(rng):
    spec = instances.redmond_circle(P)
    for x in rng.uniform(-2, 2, (20, 4)):
        col = arr(volkov.volkov_spinor(spec, x))
        J, S = instances.circle_observables_closed_form(P, x)
        np.testing.assert_allclose(rdi.dirac_current(col), arr(J), atol=1e-10)
        np.testing.assert_allclose(rdi.spin_density(col), arr(S), atol=1e-10)


def test_observables_without_drive():
    p = instances.CircleParams(a0=0.0, eB=0.7, omega=0.6)
    x = [0.3, 0.2, 0.1, 0.0]
    J, S = instances.circle_observables_closed_form(p, x)
    rho = np.exp(-0.7 * (0.2 ** 2 + 0.1 ** 2) / 2)
    np.testing.assert_allclose(arr(J), [rho, 0, 0, 0])
    np.testing.assert_allclose(arr(S), [0, 0, 0, -rho])


def test_longitudinal_drift_fraction_is_constant(rng):
    k = P.a0 ** 2 / (2 * P.omega ** 2)
    for x in rng.uniform(-2, 2, (5, 4)):
        J, _ = instances.circle_observables_closed_form(P, x)
        assert J[3] / J[0] == pytest.approx(k / (1 + k), rel=1e-13)


def test_circle_gauge_zeroes_scalar_potential(rng):
    spec = instances.redmond_circle(P)
    for x in rng.uniform(-2, 2, (10, 4)):
        A = arr(volkov.volkov_potential(spec, x))
        assert abs(A[0]) < 1e-14 and A[3] == pytest.approx(1.0)


def test_circle_fields(rng):
    spec = instances.redmond_circle(P)
    for x in rng.uniform(-2, 2, (10, 4)):
        s = volkov.volkov_fields(spec, x)
        xi = P.omega * (x[0] - x[3])
        f1p, f2p = -P.a0 * np.sin(xi), -P.a0 * np.cos(xi)
        f1pp, f2pp = -P.a0 * np.cos(xi), P.a0 * np.sin(xi)
        drift = -P.eB / P.omega
        B = [drift * f1p + f2pp, drift * f2p - f1pp, -P.eB]
        np.testing.assert_allclose(arr(s.B), B, atol=1e-14)
        np.testing.assert_allclose(arr(s.E), [B[1], -B[0], 0.0], atol=1e-14)
        m = maxwell_sources(lambda c: volkov.volkov_fields(spec, c), x)
        assert max(abs(m.rho), *np.abs(m.J), abs(m.div_B), *np.abs(m.faraday)) < 1e-9 * m.scale


def test_bagrov_profile_values():
    assert instances.bagrov_pz(0.0, 1.5) == 0.0
    assert instances.bagrov_pz(1.0, 2.0) == pytest.approx(-5.0 / 12.0)
    assert instances.bagrov_pz(-1.0, -2.0) == pytest.approx(-5.0 / 12.0)


@pytest.mark.parametrize("xi, a", [(-0.5, 1.0), (0.5, -1.0), (1.0, 0.0), (2.0, -2.0)])
def test_bagrov_profile_domain(xi, a):
    with pytest.raises(DomainError):
        instances.bagrov_pz(xi, a)


@settings(max_examples=300)
@given(st.floats(0.05, 20.0), st.floats(0.0, 1.0), st.booleans())
def test_bagrov_derivatives_and_source_free_condition(a, frac, negative):
    xi = frac * 3 * a
    if negative:
        a, xi = -a, -xi
    d1, d2 = instances.bagrov_pz_derivatives(xi, a)
    f = lambda s: instances.bagrov_pz(s, a)
    assert d1 == pytest.approx(derivative(f, xi), rel=1e-12)
    assert d2 == pytest.approx(second_derivative(f, xi), rel=1e-10)
    assert instances.bagrov_ode_residual(f(xi), d1, d2) < 1e-10


def test_ode_residual_is_not_vacuous():
    a, xi = 1.5, 0.7
    pz = instances.bagrov_pz(xi, a)
    d1, d2 = instances.bagrov_pz_derivatives(xi, a)
    assert instances.bagrov_ode_residual(pz, d1 * 1.001, d2) > 1e-4


def test_bagrov_longitudinal_field_is_constant(rng):
    a = 1.5
    spec = instances.bagrov_circle(P, a)
    for t, x, y in rng.uniform(0.1, 8, (10, 3)):
        Ez = float(primal(volkov.volkov_fields(spec, [t, x, y, 0.0]).E[2]))
        assert Ez == pytest.approx(-P.omega / a, rel=1e-12)


def test_bagrov_fields_are_source_free(rng):
    spec = instances.bagrov_circle(P, 1.5)
    for t, x, y in rng.uniform(0.1, 8, (5, 3)):
        pt = [t, x, y, 0.0]
        m = maxwell_sources(lambda c: volkov.volkov_fields(spec, c), pt)
        assert m.relative(np.concatenate([[m.rho], m.J])) < 1e-9
