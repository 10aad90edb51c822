"""Gaussian-type packets carried rigidly along a planar path ``(f(t), g(t))``.

The spinor is ``sqrt(rho') B(gamma f', gamma g', 0) R_down`` with
``rho' = exp(-eB G(x', y') / 2) / gamma``, ``x' = x - f(t)``, ``y' = y - g(t)``
and ``R_down = rotor((0, pi, 0))``.  All quantities are in internal units
(``c = hbar = m = 1``; ``eB`` is the field strength in units of ``m^2``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional

import numpy as np

from .. import sta
from ..dual import derivative, partials, primal, second_derivative, stack
from ..errors import DomainError
from ..rdi import SpinorField

# rotor((0, pi, 0)) without the cos(pi/2) round-off
R_DOWN = -(sta.I5 @ sta.ALPHA[1])


@dataclass(frozen=True)
class PlanarTransportSpec:
    """Path ``(f, g)``, envelope ``G`` and field scale ``eB``.

    The optional ``df``/``dg``/``ddf``/``ddg`` are closed-form derivatives; when
    absent the derivatives are taken with dual numbers.
    """

    f: Callable[[Any], Any]
    g: Callable[[Any], Any]
    G: Callable[[Any, Any], Any]
    eB: float
    df: Optional[Callable[[Any], Any]] = None
    dg: Optional[Callable[[Any], Any]] = None
    ddf: Optional[Callable[[Any], Any]] = None
    ddg: Optional[Callable[[Any], Any]] = None

    def velocity(self, t):
        u1 = self.df(t) if self.df else derivative(self.f, t)
        u2 = self.dg(t) if self.dg else derivative(self.g, t)
        return u1, u2

    def acceleration(self, t):
        a1 = self.ddf(t) if self.ddf else second_derivative(self.f, t)
        a2 = self.ddg(t) if self.ddg else second_derivative(self.g, t)
        return a1, a2


def lorentz_factor(u1, u2, t=None):
    u_sq = u1 * u1 + u2 * u2
    if not primal(u_sq) < 1.0:
        raise DomainError(f"superluminal path: |v| = {np.sqrt(float(primal(u_sq))):.6g} >= 1 "
                          f"at t = {primal(t)!r}")
    return 1.0 / np.sqrt(1.0 - u_sq)


def comoving(spec: PlanarTransportSpec, x):
    t, X, Y = x[0], x[1], x[2]
    return X - spec.f(t), Y - spec.g(t)


def planar_matrix(spec: PlanarTransportSpec, x):
    t = x[0]
    u1, u2 = spec.velocity(t)
    gam = lorentz_factor(u1, u2, t)
    xp, yp = comoving(spec, x)
    rho = np.exp(-0.5 * spec.eB * spec.G(xp, yp)) / gam
    return np.sqrt(rho) * (sta.boost([gam * u1, gam * u2, 0.0 * u1]) @ R_DOWN)


def planar_field(spec: PlanarTransportSpec) -> SpinorField:
    return SpinorField(lambda x: planar_matrix(spec, x))


def planar_spinor(spec: PlanarTransportSpec, x):
    """Dirac column of the transported packet; entries 1 and 4 vanish."""
    return sta.hestenes_extract(planar_matrix(spec, x))


def planar_spinor_closed(spec: PlanarTransportSpec, x):
    """The same column written out: ``sqrt(rho'/2) (0, sqrt(1+g), g (f' - i g')/sqrt(1+g), 0)``."""
    t = x[0]
    u1, u2 = spec.velocity(t)
    gam = lorentz_factor(u1, u2, t)
    xp, yp = comoving(spec, x)
    amp = np.sqrt(np.exp(-0.5 * spec.eB * spec.G(xp, yp)) / (2.0 * gam))
    root = np.sqrt(1.0 + gam)
    zero = 0.0 * amp + 0j
    return stack([zero, amp * root + 0j, amp * gam * (u1 - 1j * u2) / root, zero])


def planar_density(spec: PlanarTransportSpec, x):
    """``psi^dagger psi = exp(-eB G(x', y') / 2)``: the packet never changes shape."""
    xp, yp = comoving(spec, x)
    return np.exp(-0.5 * spec.eB * spec.G(xp, yp))


def planar_potential(spec: PlanarTransportSpec, x):
    """Closed-form ``eA^mu`` for the transported packet (``eA^3 = 0``).

    Written with ``u = (f', g')``, ``gamma = 1/sqrt(1 - u^2)`` and the
    envelope gradient ``(G_x, G_y)`` at the comoving point; the arctan
    rate ``(1 - gamma) (u x u')/u^2`` is rewritten as
    ``-gamma^2 (u x u')/(gamma + 1)`` to stay finite when ``u -> 0``.
    """
    t = x[0]
    u1, u2 = spec.velocity(t)
    a1, a2 = spec.acceleration(t)
    gam = lorentz_factor(u1, u2, t)
    xp, yp = comoving(spec, x)
    _, (Gx, Gy) = partials(lambda c: spec.G(c[0], c[1]), [xp, yp])
    k = 0.25 * spec.eB * gam
    turn = -gam * gam * (u1 * a2 - u2 * a1) / (gam + 1.0)
    along = u1 * Gx + u2 * Gy
    A0 = 0.5 * turn - k * (u2 * Gx - u1 * Gy) - gam
    A1 = -0.5 * gam * a2 - k * (u2 * along - Gy) - gam * u1
    A2 = 0.5 * gam * a1 + k * (u1 * along - Gx) - gam * u2
    return stack([A0, A1, A2, 0.0 * A0])


def quadratic_envelope_fields(u, du, ddu, xp, yp, eB, hbar=1.0):
    """``(eE, eB)`` for ``G = x^2 + y^2`` along a path with velocity ``u``.

    ``du``/``ddu`` are the first and second time derivatives of ``u``; the
    terms multiplied by ``hbar`` are the quantum corrections (``hbar = 0``
    gives the classical limit with ``eB``, ``m`` and the path held fixed).
    """
    u1, u2 = u
    a1, a2 = du
    j1, j2 = ddu
    gam = lorentz_factor(u1, u2)
    gdot = gam ** 3 * (u1 * a1 + u2 * a2)
    half = 0.5 * eB
    sym = gam + 1.0 / gam
    cross = a1 * u2 + u1 * a2
    E1 = (half * u2 * sym
          - half * (gdot * ((1.0 - u2 * u2) * yp - u1 * u2 * xp)
                    - gam * (2.0 * u2 * a2 * yp + cross * xp))
          + gdot * u1 + gam * a1
          + 0.5 * hbar * (gdot * a2 + gam * j2))
    E2 = (-half * u1 * sym
          + half * (gdot * ((1.0 - u1 * u1) * xp - u1 * u2 * yp)
                    - gam * (2.0 * u1 * a1 * xp + cross * yp))
          + gdot * u2 + gam * a2
          - 0.5 * hbar * (gdot * a1 + gam * j1))
    zero = 0.0 * E1
    return stack([E1, E2, zero]), stack([zero, zero, -half * sym])
