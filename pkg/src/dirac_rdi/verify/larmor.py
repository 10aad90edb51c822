"""Radiated energy of a classical point charge along a trajectory."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..units import CODATA_2018
from .boris import Trajectory


@dataclass(frozen=True)
class LarmorEstimate:
    """Energies in units of ``m c^2`` (``*_scaled``) and in joules."""

    radiated_scaled: float
    kinetic_scaled: float
    radiated_J: float
    kinetic_J: float

    @property
    def ratio(self) -> float:
        return self.radiated_scaled / self.kinetic_scaled if self.kinetic_scaled else np.inf


def larmor_power(velocity: np.ndarray, acceleration: np.ndarray,
                 alpha: float = CODATA_2018.alpha) -> np.ndarray:
    """Lienard power ``(2 alpha / 3) gamma^6 (a^2 - |v x a|^2)`` per sample."""
    v_sq = np.einsum("ij,ij->i", velocity, velocity)
    gam_sq = 1.0 / (1.0 - v_sq)
    a_sq = np.einsum("ij,ij->i", acceleration, acceleration)
    vxa = np.cross(velocity, acceleration)
    return (2.0 * alpha / 3.0) * gam_sq ** 3 * (a_sq - np.einsum("ij,ij->i", vxa, vxa))


def larmor_estimate(traj: Trajectory, period: float) -> LarmorEstimate:
    """Energy radiated over the first ``period`` and the mean kinetic energy there."""
    span = traj.t[-1] - traj.t[0]
    if span < period * (1.0 - 1e-12):
        raise ValueError(f"trajectory spans {span:.6g}, shorter than one period {period:.6g}")
    accel = np.gradient(traj.velocity, traj.t, axis=0, edge_order=2)
    power = larmor_power(traj.velocity, accel)
    window = traj.t <= traj.t[0] + period * (1.0 + 1e-12)
    tw = traj.t[window]
    radiated = float(np.trapezoid(power[window], tw))
    v_sq = np.einsum("ij,ij->i", traj.velocity, traj.velocity)[window]
    # gamma - 1 = gamma^2 v^2 / (gamma + 1), free of cancellation at low speed
    g = traj.gamma[window]
    kinetic = float(np.mean(g * g * v_sq / (g + 1.0)))
    rest = CODATA_2018.electron_rest_energy
    return LarmorEstimate(radiated, kinetic, radiated * rest, kinetic * rest)
