"""Packets riding a plane wave along ``z`` on top of a longitudinal magnetic field.

With ``xi = omega (t - z)``, ``p0 = sqrt(1 + pz^2)`` and the comoving
coordinates ``x' = x + S1(xi)``, ``y' = y + S2(xi)`` where

    S_i(xi) = int_0^xi (pz + p0) f_i' / omega^2,

the matrix spinor is

    Psi = sqrt(rho) N B_z R_down exp(-G21 Phi),
    rho = (pz + p0) exp(-eB G(x', y') / 2),
    N   = 1 - (f1' (alpha1 + I5 alpha2) + f2' (alpha2 - I5 alpha1)) / (2 omega (p0 - pz)).

``N`` is the exponential of a null bivector, so it truncates after the linear
term.  Internal units throughout (``c = hbar = m = 1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional

import numpy as np

from .. import sta
from ..dual import derivative, partials, primal, second_derivative, stack
from ..emfield import EMSample
from ..errors import DomainError
from ..quadrature import integrate_from_zero
from ..rdi import SpinorField
from .planar import R_DOWN


@dataclass(frozen=True)
class VolkovFamilySpec:
    """Free functions of the family.

    ``Phi(xi, x, y)`` is the gauge phase; ``None`` selects the gauge
    ``eA^0 = 0`` built by quadrature.  ``shift`` optionally returns the closed
    form of ``(S1(xi), S2(xi))``; otherwise the shifts are integrated.
    """

    f1: Callable[[Any], Any]
    f2: Callable[[Any], Any]
    pz: Callable[[Any], Any]
    G: Callable[[Any, Any], Any]
    omega: float
    eB: float
    Phi: Optional[Callable[[Any, Any, Any], Any]] = None
    shift: Optional[Callable[[Any], Any]] = None
    rtol: float = 1e-12


def p0_of(pz):
    return np.sqrt(1.0 + pz * pz)


def lightfront_gap(pz, p0):
    """``p0 - pz`` evaluated without cancellation."""
    if primal(pz) > 0:
        return 1.0 / (p0 + pz)
    return p0 - pz


def _profile(spec: VolkovFamilySpec, xi):
    pz = spec.pz(xi)
    p0 = p0_of(pz)
    gap = lightfront_gap(pz, p0)
    if not primal(gap) > 0 or not np.isfinite(primal(gap)):
        raise DomainError(f"p0 - pz = {primal(gap)!r} is not positive at xi = {primal(xi)!r}")
    return pz, p0, gap


def shift_integrand(spec: VolkovFamilySpec, s):
    pz = spec.pz(s)
    w2 = spec.omega ** 2
    lift = pz + p0_of(pz)
    return stack([lift * derivative(spec.f1, s) / w2, lift * derivative(spec.f2, s) / w2])


def shifts(spec: VolkovFamilySpec, xi):
    """``(S1(xi), S2(xi))``: closed form if supplied, else adaptive quadrature."""
    if spec.shift is not None:
        return spec.shift(xi)
    return integrate_from_zero(lambda s: shift_integrand(spec, s), xi, rtol=spec.rtol)


def lightfront(spec: VolkovFamilySpec, x):
    """``(xi, x', y')`` at the spacetime point ``x``."""
    t, X, Y, Z = x
    xi = spec.omega * (t - Z)
    S = shifts(spec, xi)
    return xi, X + S[0], Y + S[1]


def _grad_G(spec, xp, yp):
    return partials(lambda c: spec.G(c[0], c[1]), [xp, yp])[1]


def laplacian_G(spec: VolkovFamilySpec, xp, yp):
    gxx = derivative(lambda a: derivative(lambda b: spec.G(b, yp), a), xp)
    gyy = derivative(lambda a: derivative(lambda b: spec.G(xp, b), a), yp)
    return gxx + gyy


def _scalar_potential_rate(spec, xi, xp, yp):
    """Everything in ``eA^0`` except ``omega dPhi/dxi``."""
    pz, p0, _ = _profile(spec, xi)
    f1p, f2p = derivative(spec.f1, xi), derivative(spec.f2, xi)
    Gx, Gy = _grad_G(spec, xp, yp)
    w = spec.omega
    lift = pz + p0
    return (-lift * (f1p * f1p + f2p * f2p) / (2.0 * w * w) - p0
            - lift * spec.eB * (f1p * Gy - f2p * Gx) / (4.0 * w))


def gauge_phase(spec: VolkovFamilySpec, xi, X, Y):
    """``Phi`` with ``eA^0 = 0``: ``Phi(xi) = -int_0^xi rate / omega``, ``Phi(0) = 0``."""
    if spec.Phi is not None:
        return spec.Phi(xi, X, Y)

    def integrand(s):
        S = shifts(spec, s)
        return -_scalar_potential_rate(spec, s, X + S[0], Y + S[1]) / spec.omega

    return integrate_from_zero(integrand, xi, rtol=spec.rtol)


def volkov_matrix(spec: VolkovFamilySpec, x):
    xi, xp, yp = lightfront(spec, x)
    pz, p0, gap = _profile(spec, xi)
    f1p, f2p = derivative(spec.f1, xi), derivative(spec.f2, xi)
    rho = (pz + p0) * np.exp(-0.5 * spec.eB * spec.G(xp, yp))
    phase = gauge_phase(spec, xi, x[1], x[2])
    null = sta.null_bivector_exp(f1p, f2p, -1.0 / (2.0 * spec.omega * gap))
    boost_z = sta.boost([0.0 * pz, 0.0 * pz, pz])
    turn = np.cos(phase) * sta.I4 - np.sin(phase) * sta.G21
    return np.sqrt(rho) * (null @ boost_z @ R_DOWN @ turn)


def volkov_field(spec: VolkovFamilySpec) -> SpinorField:
    return SpinorField(lambda x: volkov_matrix(spec, x))


def volkov_spinor(spec: VolkovFamilySpec, x):
    return sta.hestenes_extract(volkov_matrix(spec, x))


def volkov_density(spec: VolkovFamilySpec, x):
    """``psi^dagger psi``."""
    col = np.asarray(primal(volkov_spinor(spec, x)))
    return float(np.real(np.vdot(col, col)))


def volkov_potential(spec: VolkovFamilySpec, x):
    """Closed-form contravariant ``eA^mu``; ``eA^3 = eA^0 - pz + p0``."""
    xi, xp, yp = lightfront(spec, x)
    pz, p0, _ = _profile(spec, xi)
    f1p, f2p = derivative(spec.f1, xi), derivative(spec.f2, xi)
    Gx, Gy = _grad_G(spec, xp, yp)
    _, (Pxi, Px, Py) = partials(lambda c: gauge_phase(spec, c[0], c[1], c[2]), [xi, x[1], x[2]])
    w, eB = spec.omega, spec.eB
    A0 = w * Pxi + _scalar_potential_rate(spec, xi, xp, yp)
    A1 = 0.25 * eB * Gy - Px + f1p / w
    A2 = -0.25 * eB * Gx - Py + f2p / w
    return stack([A0, A1, A2, A0 - pz + p0])


def volkov_fields(spec: VolkovFamilySpec, x):
    """Closed-form ``(eE, eB)``."""
    xi, xp, yp = lightfront(spec, x)
    pz, p0, _ = _profile(spec, xi)
    f1p, f2p = derivative(spec.f1, xi), derivative(spec.f2, xi)
    f1pp, f2pp = second_derivative(spec.f1, xi), second_derivative(spec.f2, xi)
    dpz = derivative(spec.pz, xi)
    lap = laplacian_G(spec, xp, yp)
    w, eB = spec.omega, spec.eB
    k = -eB * (pz + p0) * lap / (4.0 * w)
    B = stack([k * f1p + f2pp, k * f2p - f1pp, -0.25 * eB * lap])
    E = stack([B[1], -B[0], w * dpz * (1.0 - pz / p0)])
    return EMSample(E, B, tuple(x))


def volkov_sources(spec: VolkovFamilySpec, x):
    """Closed-form charge density and current ``(rho_e, J)`` of the driving fields."""
    xi, xp, yp = lightfront(spec, x)
    pz, p0, _ = _profile(spec, xi)
    f1p, f2p = derivative(spec.f1, xi), derivative(spec.f2, xi)
    dpz = derivative(spec.pz, xi)
    ddpz = second_derivative(spec.pz, xi)
    _, (lx, ly) = partials(lambda c: laplacian_G(spec, c[0], c[1]), [xp, yp])
    w, eB = spec.omega, spec.eB
    rho = (w * w * dpz * dpz / p0 ** 3 - w * w * ddpz * (1.0 - pz / p0)
           + eB * (p0 + pz) * (f1p * ly - f2p * lx) / (4.0 * w))
    return rho, stack([-0.25 * eB * ly, 0.25 * eB * lx, rho])
