import numpy as np
import pytest

from dirac_rdi import rdi
from dirac_rdi.dual import partials, primal
from dirac_rdi.errors import DomainError
from dirac_rdi.solutions import instances, volkov
from dirac_rdi.solutions.volkov import VolkovFamilySpec
from dirac_rdi.verify.fields import fields_from_potential, maxwell_sources


def quad(x, y):
    return x * x + y * y


def general_spec(**kw):
    base = dict(f1=lambda s: 0.3 * np.sin(s) + 0.1 * np.cos(2 * s), f2=lambda s: -0.2 * np.cos(s),
                pz=lambda s: 0.3 * np.sin(0.5 * s), G=lambda x, y: x * x + 2 * y * y + 0.1 * x ** 3,
                omega=0.7, eB=0.5, Phi=lambda xi, x, y: xi / 0.7 + 0.1 * x * np.sin(xi))
    base.update(kw)
    return VolkovFamilySpec(**base)


def arr(v):
    return np.asarray(primal(v))


def test_trivial_drive_gives_ground_state_with_zero_scalar_potential():
    spec = VolkovFamilySpec(f1=lambda s: 0.0 * s, f2=lambda s: 0.0 * s, pz=lambda s: 0.0 * s,
                            G=quad, omega=0.5, eB=0.8)
    x = [0.7, 0.3, -0.2, 0.1]
    A = arr(volkov.volkov_potential(spec, x))
    # default gauge: eA^0 = 0 and the vector part is the symmetric gauge of -eB z
    np.testing.assert_allclose(A, [0.0, 0.8 * x[2] / 2, -0.8 * x[1] / 2, 1.0], atol=1e-13)
    col = arr(volkov.volkov_spinor(spec, x))
    env = np.exp(-0.8 * quad(x[1], x[2]) / 4)
    assert col[0] == 0 and col[2] == 0 and col[3] == 0
    assert abs(col[1]) == pytest.approx(env, rel=1e-13)


def test_inversion_matches_closed_form_potential(rng):
    spec = general_spec()
    field = volkov.volkov_field(spec)
    for x in rng.uniform(-1.5, 1.5, (20, 4)):
        A, residue = rdi.invert_potential(field, x)
        closed = arr(volkov.volkov_potential(spec, x))
        assert np.linalg.norm(A - closed) < 1e-8 * np.linalg.norm(closed)
        assert residue < 1e-10
        assert rdi.dirac_residual(lambda c: volkov.volkov_spinor(spec, c),
                                  lambda c: volkov.volkov_potential(spec, c), x) < 1e-8


def test_default_gauge_inversion_zeroes_scalar_potential(rng):
    spec = general_spec(Phi=None)
    field = volkov.volkov_field(spec)
    for x in rng.uniform(-1, 1, (3, 4)):
        A, residue = rdi.invert_potential(field, x)
        assert abs(A[0]) < 1e-8 * np.linalg.norm(A) and residue < 1e-10
        np.testing.assert_allclose(A, arr(volkov.volkov_potential(spec, x)), atol=1e-9)


def test_gauge_shift_moves_scalar_and_longitudinal_parts_together():
    a = general_spec()
    b = general_spec(Phi=lambda xi, x, y: a.Phi(xi, x, y) + 0.37 * xi)
    x = [0.4, 0.2, -0.3, 0.5]
    d = arr(volkov.volkov_potential(b, x)) - arr(volkov.volkov_potential(a, x))
    np.testing.assert_allclose(d, [0.37 * a.omega, 0, 0, 0.37 * a.omega], atol=1e-14)


def test_longitudinal_component_relation(rng):
    spec = general_spec()
    for x in rng.uniform(-1, 1, (5, 4)):
        A = arr(volkov.volkov_potential(spec, x))
        xi = spec.omega * (x[0] - x[3])
        pz = spec.pz(xi)
        assert A[3] == pytest.approx(A[0] - pz + np.sqrt(1 + pz * pz), abs=1e-14)


def test_without_background_field_only_plane_wave_terms_remain(rng):
    spec = VolkovFamilySpec(f1=lambda s: 0.4 * np.cos(s), f2=lambda s: 0.4 * np.sin(s),
                            pz=lambda s: 0.0 * s, G=quad, omega=0.6, eB=0.0)
    for x in rng.uniform(-2, 2, (3, 4)):
        _, (dt, dx, dy, dz) = partials(lambda c: volkov.volkov_potential(spec, c), x)
        np.testing.assert_allclose(arr(dx), 0, atol=1e-12)
        np.testing.assert_allclose(arr(dy), 0, atol=1e-12)
        # depends on t - z only
        np.testing.assert_allclose(arr(dt), -arr(dz), atol=1e-12)


def test_fields_are_the_curl_of_the_potential(rng):
    spec = general_spec()
    for x in rng.uniform(-1, 1, (10, 4)):
        ref = fields_from_potential(lambda c: volkov.volkov_potential(spec, c), x)
        s = volkov.volkov_fields(spec, x)
        np.testing.assert_allclose(arr(s.E), arr(ref.E), atol=1e-12)
        np.testing.assert_allclose(arr(s.B), arr(ref.B), atol=1e-12)


def test_longitudinal_electric_field(rng):
    spec = general_spec()
    for x in rng.uniform(-1, 1, (5, 4)):
        xi = spec.omega * (x[0] - x[3])
        pz = spec.pz(xi)
        dpz = 0.15 * np.cos(0.5 * xi)
        assert arr(volkov.volkov_fields(spec, x).E)[2] == pytest.approx(
            spec.omega * dpz * (1 - pz / np.sqrt(1 + pz * pz)), rel=1e-12)


def test_numeric_sources_match_closed_form(rng):
    spec = general_spec()
    for x in rng.uniform(-1, 1, (20, 4)):
        m = maxwell_sources(lambda c: volkov.volkov_fields(spec, c), x)
        rho, J = volkov.volkov_sources(spec, x)
        numeric = np.concatenate([[m.rho], m.J])
        closed = np.concatenate([[float(primal(rho))], arr(J)])
        assert np.max(np.abs(numeric - closed)) < 1e-8 * max(np.max(np.abs(closed)), m.scale)
        assert m.relative(m.faraday) < 1e-12 and m.relative(m.div_B) < 1e-12


def test_transverse_current_from_envelope_curvature():
    spec = general_spec()
    x = [0.3, 0.5, -0.2, 0.1]
    _, xp, yp = volkov.lightfront(spec, x)
    _, (lx, ly) = partials(lambda c: volkov.laplacian_G(spec, c[0], c[1]), [xp, yp])
    _, J = volkov.volkov_sources(spec, x)
    assert float(primal(J[0])) == pytest.approx(-0.25 * spec.eB * float(primal(ly)))
    assert float(primal(J[1])) == pytest.approx(0.25 * spec.eB * float(primal(lx)))


def test_constant_laplacian_without_longitudinal_profile_is_source_free(rng):
    spec = general_spec(pz=lambda s: 0.0 * s, G=quad)
    for x in rng.uniform(-1, 1, (5, 4)):
        rho, J = volkov.volkov_sources(spec, x)
        assert float(primal(rho)) == 0
        np.testing.assert_allclose(arr(J), 0, atol=0)


def test_harmonic_envelope_removes_background_terms():
    spec = general_spec(G=lambda x, y: x * x - y * y + 10.0, pz=lambda s: 0.0 * s)
    x = [0.3, 0.5, -0.2, 0.1]
    B = arr(volkov.volkov_fields(spec, x).B)
    xi = spec.omega * (x[0] - x[3])
    f1pp = -0.3 * np.sin(xi) - 0.4 * np.cos(2 * xi)
    f2pp = 0.2 * np.cos(xi)
    np.testing.assert_allclose(B, [f2pp, -f1pp, 0.0], atol=1e-14)


def test_quadrature_shifts_match_closed_form():
    p = instances.CircleParams(a0=0.4, eB=0.7, omega=0.6)
    closed, quad_spec = instances.redmond_circle(p), instances.redmond_circle(p, closed_form=False)
    for xi in (0.0, 0.5, 3.0, -2.0, 12.0):
        np.testing.assert_allclose(arr(volkov.shifts(quad_spec, xi)), arr(volkov.shifts(closed, xi)),
                                   rtol=1e-12, atol=1e-13)


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_gap_guard():
    from dirac_rdi.dual import stack
    spec = general_spec(pz=lambda s: 1e200 + 0.0 * s, shift=lambda s: stack([0.0 * s, 0.0 * s]))
    with pytest.raises(DomainError):
        volkov.volkov_spinor(spec, [0.0, 0.0, 0.0, 0.0])


def test_lightfront_gap_without_cancellation():
    pz = 1e8
    assert volkov.lightfront_gap(pz, volkov.p0_of(pz)) == pytest.approx(0.5e-8, rel=1e-12)
