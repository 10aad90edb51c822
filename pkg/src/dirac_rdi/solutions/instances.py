"""Named members of the plane-wave family with hand-written closed forms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..dual import primal, stack
from ..errors import DomainError
from .volkov import VolkovFamilySpec


def _quadratic(x, y):
    return x * x + y * y


@dataclass(frozen=True)
class CircleParams:
    """Circularly polarized drive ``f1 = a0 (cos xi - 1)``, ``f2 = -a0 sin xi``.

    ``a0`` is the wave's field amplitude in the same internal units as ``eB``.
    """

    a0: float
    eB: float
    omega: float


def circle_phase(p: CircleParams, xi, x, y):
    """Closed-form gauge phase for the circle; it makes ``eA^0`` vanish."""
    a0, eB, w = p.a0, p.eB, p.omega
    return (xi * (a0 * a0 * (eB + w) + 2.0 * w ** 3)
            + a0 * eB * (w * w * (x * np.sin(xi) + y * np.cos(xi)) - a0 * np.sin(xi))) / (2.0 * w ** 4)


def redmond_circle(p: CircleParams, closed_form: bool = True) -> VolkovFamilySpec:
    """Packet circling in a circularly polarized wave plus a uniform ``B_z``.

    With ``closed_form`` the coordinate shifts ``f_i(xi)/omega^2`` and the
    closed-form phase are used; otherwise both come from quadrature.
    """
    a0, w = p.a0, p.omega

    def f1(s):
        return a0 * (np.cos(s) - 1.0)

    def f2(s):
        return -a0 * np.sin(s)

    kwargs = {}
    if closed_form:
        kwargs["shift"] = lambda s: stack([f1(s) / w ** 2, f2(s) / w ** 2])
        kwargs["Phi"] = lambda xi, x, y: circle_phase(p, xi, x, y)
    return VolkovFamilySpec(f1=f1, f2=f2, pz=lambda s: 0.0 * s, G=_quadratic,
                            omega=w, eB=p.eB, **kwargs)


def circle_column_closed_form(p: CircleParams, x):
    """Hand-written column for the circle; entries 1 and 3 carry the drive."""
    a0, eB, w = p.a0, p.eB, p.omega
    xi = w * (x[0] - x[3])
    X, Y = x[1], x[2]
    env = np.exp(-eB * ((a0 * (np.cos(xi) - 1.0) + X * w * w) ** 2
                        + (-a0 * np.sin(xi) + Y * w * w) ** 2) / (4.0 * w ** 4))
    phase = np.exp(-1j * circle_phase(p, xi, X, Y))
    top = a0 * (np.sin(xi) - 1j * np.cos(xi)) / (2.0 * w)
    return stack([phase * env * top, phase * env + 0j, phase * env * top, 0.0 * env + 0j])


def circle_observables_closed_form(p: CircleParams, x):
    """Closed-form Dirac current and spin density of the circling packet."""
    a0, eB, w = p.a0, p.eB, p.omega
    xi = w * (x[0] - x[3])
    X, Y = x[1], x[2]
    env = np.exp(-eB * ((a0 * (np.cos(xi) - 1.0) + X * w * w) ** 2
                        + (-a0 * np.sin(xi) + Y * w * w) ** 2) / (2.0 * w ** 4))
    drift = a0 * a0 / (2.0 * w * w)
    sx, cy = a0 * np.sin(xi) / w, a0 * np.cos(xi) / w
    current = stack([env * (1.0 + drift), env * sx, env * cy, env * drift])
    spin = stack([env * drift, env * sx, env * cy, env * (drift - 1.0)])
    return current, spin


# -- longitudinal electric field -------------------------------------------------

def _check_bagrov(xi, a):
    xi_v, a_v = float(primal(xi)), float(a)
    if a_v == 0.0 or xi_v * a_v < 0.0 or xi_v == -a_v:
        raise DomainError(f"bagrov pz needs a != 0 and xi with the sign of a (xi={xi_v!r}, a={a_v!r})")


def bagrov_pz(xi, a: float):
    """``pz(xi) = -xi (2a + xi) / (2a (a + xi))``, a source-free longitudinal profile."""
    _check_bagrov(xi, a)
    return -xi * (2.0 * a + xi) / (2.0 * a * (a + xi))


def bagrov_pz_derivatives(xi, a: float):
    """Hand-written ``(pz', pz'')``."""
    _check_bagrov(xi, a)
    s = a + xi
    return -(s * s + a * a) / (2.0 * a * s * s), a / (s ** 3)


def bagrov_ode_residual(pz, dpz, ddpz):
    """Relative residual of ``pz'^2 - p0^2 (p0 - pz) pz'' = 0``."""
    p0 = np.sqrt(1.0 + pz * pz)
    lhs = dpz * dpz
    rhs = p0 * p0 * (p0 - pz) * ddpz
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def bagrov_circle(p: CircleParams, a: float) -> VolkovFamilySpec:
    """Circular drive with the source-free ``pz``; gauge and shifts by quadrature.

    Only ``xi`` with the sign of ``a`` is admissible.
    """
    a0 = p.a0
    return VolkovFamilySpec(
        f1=lambda s: a0 * (np.cos(s) - 1.0),
        f2=lambda s: -a0 * np.sin(s),
        pz=lambda s: bagrov_pz(s, a),
        G=_quadratic, omega=p.omega, eB=p.eB)
