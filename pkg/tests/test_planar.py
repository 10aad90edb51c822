import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dirac_rdi import rdi
from dirac_rdi.dual import derivative, primal
from dirac_rdi.errors import DomainError
from dirac_rdi.solutions import planar
from dirac_rdi.solutions.planar import PlanarTransportSpec
from dirac_rdi.verify.fields import fields_from_potential


def line(vx, vy, eB=0.5):
    return PlanarTransportSpec(f=lambda t: vx * t, g=lambda t: vy * t,
                               G=lambda x, y: x * x + y * y, eB=eB)


def circle(r=0.5, w=0.9, eB=0.5):
    return PlanarTransportSpec(f=lambda t: r * np.cos(w * t), g=lambda t: r * np.sin(w * t),
                               G=lambda x, y: x * x + y * y, eB=eB)


def test_column_has_only_middle_entries(rng):
    spec = circle()
    for x in rng.uniform(-1, 1, (10, 4)):
        col = np.asarray(primal(planar.planar_spinor(spec, x)))
        assert col[0] == 0 and col[3] == 0
        np.testing.assert_allclose(col, primal(planar.planar_spinor_closed(spec, x)), atol=1e-15)


def test_static_packet_is_the_field_ground_state():
    spec = line(0.0, 0.0, eB=0.9)
    x = [0.2, 0.3, -0.5, 0.0]
    col = np.asarray(primal(planar.planar_spinor(spec, x)))
    env = np.exp(-0.9 * (0.3 ** 2 + 0.5 ** 2) / 4)
    np.testing.assert_allclose(col, [0, env, 0, 0], atol=1e-16)
    A = primal(planar.planar_potential(spec, x))
    np.testing.assert_allclose(A, [-1.0, 0.9 * x[2] / 2, -0.9 * x[1] / 2, 0.0], atol=1e-15)


def test_straight_line_motion_has_no_turning_term():
    # a constant velocity ratio: the spin-frame rotation rate and the accelerations vanish
    spec = line(0.3, -0.4)
    x = [0.7, 0.21, -0.28, 0.0]  # the packet centre, where the envelope gradient vanishes
    A = primal(planar.planar_potential(spec, x))
    gam = 1 / np.sqrt(1 - 0.25)
    np.testing.assert_allclose(A, [-gam, -gam * 0.3, gam * 0.4, 0.0], atol=1e-15)


def test_superluminal_path_is_rejected():
    spec = line(0.8, 0.7)
    with pytest.raises(DomainError, match="superluminal"):
        planar.planar_spinor(spec, [0.0, 0.0, 0.0, 0.0])


@settings(max_examples=200)
@given(st.floats(0.0, 6.0), st.floats(-2, 2), st.floats(-2, 2))
def test_density_is_a_rigid_translate(t, ox, oy):
    spec = circle()
    cx, cy = spec.f(t), spec.g(t)
    moved = planar.planar_density(spec, [t, cx + ox, cy + oy, 0.0])
    start = planar.planar_density(spec, [0.0, spec.f(0.0) + ox, spec.g(0.0) + oy, 0.0])
    assert moved == pytest.approx(start, rel=1e-13, abs=1e-300)


def test_density_matches_column_norm(rng):
    spec = circle()
    for x in rng.uniform(-1, 1, (10, 4)):
        col = np.asarray(primal(planar.planar_spinor(spec, x)))
        J = rdi.dirac_current(col)
        assert J[0] == pytest.approx(planar.planar_density(spec, x), rel=1e-14)


def test_closed_form_derivatives_match_dual_numbers():
    w, r = 0.9, 0.5
    closed = PlanarTransportSpec(
        f=lambda t: r * np.cos(w * t), g=lambda t: r * np.sin(w * t), G=lambda x, y: x * x + y * y,
        eB=0.5, df=lambda t: -r * w * np.sin(w * t), dg=lambda t: r * w * np.cos(w * t),
        ddf=lambda t: -r * w * w * np.cos(w * t), ddg=lambda t: -r * w * w * np.sin(w * t))
    auto = circle(r, w)
    for t in (0.0, 0.4, 2.2):
        assert closed.velocity(t) == pytest.approx(auto.velocity(t), abs=1e-15)
        assert closed.acceleration(t) == pytest.approx(auto.acceleration(t), abs=1e-15)


def test_quadratic_envelope_fields_match_potential_derivatives(rng):
    """The hand-derived fields against dual-number derivatives of the potential, any path."""
    spec = PlanarTransportSpec(f=lambda t: 0.3 * np.cos(t) + 0.2 * np.sin(2 * t),
                               g=lambda t: 0.4 * np.sin(1.3 * t),
                               G=lambda x, y: x * x + y * y, eB=0.8)
    for x in rng.uniform(-1, 1, (20, 4)):
        t = x[0]
        u = spec.velocity(t)
        du = spec.acceleration(t)
        ddu = (derivative(lambda s: spec.acceleration(s)[0], t),
               derivative(lambda s: spec.acceleration(s)[1], t))
        xp, yp = planar.comoving(spec, x)
        E, B = planar.quadratic_envelope_fields(u, du, ddu, xp, yp, spec.eB)
        ref = fields_from_potential(lambda c: planar.planar_potential(spec, c), x)
        np.testing.assert_allclose(primal(E), primal(ref.E), atol=1e-13)
        np.testing.assert_allclose(primal(B), primal(ref.B), atol=1e-13)
