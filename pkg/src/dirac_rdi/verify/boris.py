"""Relativistic Boris pusher for ``d(gamma v)/dt = eE + v x eB`` (``m = c = 1``)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..errors import ConfigurationError, DomainError

MAX_ROTATION = np.pi / 4


@dataclass(frozen=True)
class Trajectory:
    t: np.ndarray
    position: np.ndarray
    velocity: np.ndarray
    gamma: np.ndarray

    def __len__(self) -> int:
        return len(self.t)


FieldFn = Callable[[float, np.ndarray], tuple]


def _rotate(u, bvec, dt, gam):
    tvec = 0.5 * dt * bvec / gam
    angle = 2.0 * np.arctan(np.linalg.norm(tvec))
    if angle > MAX_ROTATION:
        raise ConfigurationError(f"time step too large: field rotation {angle:.3f} rad per step "
                                 f"exceeds pi/4")
    svec = 2.0 * tvec / (1.0 + tvec @ tvec)
    uprime = u + np.cross(u, tvec)
    return u + np.cross(uprime, svec)


def lorentz_push(position, velocity, fields: FieldFn, dt: float, steps: int,
                 t0: float = 0.0) -> Trajectory:
    """Integrate with the split kick-rotate-kick scheme at fixed ``dt``.

    ``fields(t, r)`` returns ``(eE, eB)`` as 3-vectors.  Each step drifts half
    a step, applies the Boris update with fields sampled at the midpoint and
    drifts the remaining half, so samples are synchronous in time.
    """
    r = np.asarray(position, dtype=float).copy()
    v = np.asarray(velocity, dtype=float)
    speed_sq = float(v @ v)
    if not speed_sq < 1.0:
        raise DomainError(f"initial speed {np.sqrt(speed_sq):.6g} is not below c")
    u = v / np.sqrt(1.0 - speed_sq)
    ts = np.empty(steps + 1)
    rs = np.empty((steps + 1, 3))
    vs = np.empty((steps + 1, 3))
    gs = np.empty(steps + 1)

    def record(i, t, r, u):
        g = np.sqrt(1.0 + u @ u)
        ts[i], rs[i], vs[i], gs[i] = t, r, u / g, g

    record(0, t0, r, u)
    for n in range(steps):
        t = t0 + n * dt
        gam = np.sqrt(1.0 + u @ u)
        mid = r + 0.5 * dt * u / gam
        E, B = fields(t + 0.5 * dt, mid)
        E = np.asarray(E, dtype=float)
        B = np.asarray(B, dtype=float)
        u_minus = u + 0.5 * dt * E
        u_plus = _rotate(u_minus, B, dt, np.sqrt(1.0 + u_minus @ u_minus))
        u = u_plus + 0.5 * dt * E
        r = mid + 0.5 * dt * u / np.sqrt(1.0 + u @ u)
        record(n + 1, t0 + (n + 1) * dt, r, u)
    return Trajectory(ts, rs, vs, gs)
