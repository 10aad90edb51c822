"""Gaussian packet driven around the ellipse ``(a1 cos wt, a2 sin wt)``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..dual import stack
from ..emfield import EMSample
from ..errors import DomainError
from .planar import PlanarTransportSpec, lorentz_factor, quadratic_envelope_fields


@dataclass(frozen=True)
class EllipseParams:
    """Semi-axes, angular frequency and field scale in internal units."""

    a1: float
    a2: float
    eB: float
    omega: float

    def __post_init__(self):
        if self.omega <= 0 or self.eB < 0 or self.a1 < 0 or self.a2 < 0:
            raise DomainError(f"invalid ellipse parameters {self}")
        speed = self.omega * max(self.a1, self.a2)
        if not speed < 1.0:
            raise DomainError(f"superluminal ellipse: omega * max(a1, a2) = {speed:.6g} >= c")

    @classmethod
    def from_scaled(cls, beta1: float, beta2: float, b: float, mu: float) -> "EllipseParams":
        """From ``beta_i = a_i w/c``, ``b = eB/(m w)`` and ``mu = m c^2/(hbar w)``."""
        return cls(a1=beta1 * mu, a2=beta2 * mu, eB=b / mu, omega=1.0 / mu)

    @property
    def period(self) -> float:
        return 2.0 * np.pi / self.omega

    def path(self, t):
        w = self.omega
        return self.a1 * np.cos(w * t), self.a2 * np.sin(w * t)

    def velocity(self, t):
        w = self.omega
        return -self.a1 * w * np.sin(w * t), self.a2 * w * np.cos(w * t)

    def acceleration(self, t):
        w2 = self.omega ** 2
        return -self.a1 * w2 * np.cos(self.omega * t), -self.a2 * w2 * np.sin(self.omega * t)

    def jerk(self, t):
        w3 = self.omega ** 3
        return self.a1 * w3 * np.sin(self.omega * t), -self.a2 * w3 * np.cos(self.omega * t)

    def gamma(self, t):
        return lorentz_factor(*self.velocity(t), t)

    def spec(self) -> PlanarTransportSpec:
        w, a1, a2 = self.omega, self.a1, self.a2
        return PlanarTransportSpec(
            f=lambda t: a1 * np.cos(w * t),
            g=lambda t: a2 * np.sin(w * t),
            G=lambda x, y: x * x + y * y,
            eB=self.eB,
            df=lambda t: -a1 * w * np.sin(w * t),
            dg=lambda t: a2 * w * np.cos(w * t),
            ddf=lambda t: -a1 * w * w * np.cos(w * t),
            ddg=lambda t: -a2 * w * w * np.sin(w * t),
        )


def _comoving(params: EllipseParams, x):
    f, g = params.path(x[0])
    return x[1] - f, x[2] - g


def ellipse_fields(params: EllipseParams, x, hbar: float = 1.0) -> EMSample:
    """Driving fields ``(eE, eB)`` of the elliptical packet at ``x``.

    Obtained by differentiating the closed-form potential.  The expression has
    no ``a1^2 - a2^2`` denominator, so the circular orbit needs no special case.
    """
    t = x[0]
    xp, yp = _comoving(params, x)
    E, B = quadratic_envelope_fields(params.velocity(t), params.acceleration(t),
                                     params.jerk(t), xp, yp, params.eB, hbar)
    return EMSample(E, B, tuple(x))


def nonrelativistic_fields(params: EllipseParams, x) -> EMSample:
    t, w, eB = x[0], params.omega, params.eB
    E = stack([w * np.cos(w * t) * (eB * params.a2 - params.a1 * w),
               w * np.sin(w * t) * (eB * params.a1 - params.a2 * w),
               0.0 * t])
    return EMSample(E, stack([0.0 * t, 0.0 * t, -eB + 0.0 * t]), tuple(x))


def ultrarelativistic_fields(params: EllipseParams, x) -> EMSample:
    """A quoted large-``gamma`` form, in lab coordinates ``x, y``.

    Kept verbatim for comparison; it is singular for a circle and is not a
    consistent asymptotic of :func:`ellipse_fields`.
    """
    a1, a2 = params.a1, params.a2
    if a1 == a2:
        raise DomainError("the large-gamma form divides by a1^2 - a2^2; undefined for a circle")
    t, X, Y = x[0], x[1], x[2]
    w, eB = params.omega, params.eB
    gam = params.gamma(t)
    d = 2.0 * (a1 * a1 - a2 * a2)
    pre = gam * eB * w
    E = stack([pre * (a2 * np.cos(w * t) - a2 * a1 * X / d),
               pre * (a1 * np.sin(w * t) + a1 * a2 * Y / d),
               0.0 * t])
    return EMSample(E, stack([0.0 * t, 0.0 * t, -0.5 * gam * eB]), tuple(x))


def ellipse_limit_fields(kind: str, params: EllipseParams, x) -> EMSample:
    """``kind`` is ``"nonrel"``, ``"relativistic"`` or ``"classical"``."""
    if kind == "nonrel":
        return nonrelativistic_fields(params, x)
    if kind == "relativistic":
        return ultrarelativistic_fields(params, x)
    if kind == "classical":
        return ellipse_fields(params, x, hbar=0.0)
    raise ValueError(f"unknown limit {kind!r}; expected nonrel, relativistic or classical")


def elliptic_column_closed_form(params: EllipseParams, x):
    """Hand-transcribed Dirac column of the elliptical packet, unit normalization.

    Components written out with ``c = m = hbar = 1``.  Its third entry is the
    complex conjugate of what the matrix construction gives, and this column
    does not solve the Dirac equation with the packet's potential; it is kept
    only to document that mismatch.
    """
    t, X, Y = x[0], x[1], x[2]
    w = params.omega
    s, c = np.sin(w * t), np.cos(w * t)
    root = np.sqrt(1.0 - w * w * (params.a1 ** 2 * s * s + params.a2 ** 2 * c * c))
    env = np.exp(-params.eB * ((X - params.a1 * c) ** 2 + (Y - params.a2 * s) ** 2) / 4.0)
    inner = np.sqrt(1.0 / root + 1.0)
    up = root ** 0.5 * inner * env / np.sqrt(2.0)
    side = w * (-params.a1 * s + 1j * params.a2 * c) * env / (np.sqrt(2.0) * root ** 0.5 * inner)
    zero = 0.0 * up
    return stack([zero, up + 0j, side, zero])


def elliptic_current_closed_form(params: EllipseParams, x):
    """Closed-form ``J_D`` of the elliptical packet (unit normalization)."""
    t, X, Y = x[0], x[1], x[2]
    w = params.omega
    s, c = np.sin(w * t), np.cos(w * t)
    env = np.exp(-params.eB * ((X - params.a1 * c) ** 2 + (Y - params.a2 * s) ** 2) / 2.0)
    return stack([env, -params.a1 * w * s * env, params.a2 * w * c * env, 0.0 * env])
