"""Field tensor and Maxwell sources from differentiable callables.

Conventions (internal units, contravariant potential ``eA^mu``)::

    F^{mu nu} = d^mu A^nu - d^nu A^mu
    E_k = F^{k0} = -d_k A^0 - d_t A^k
    B_1 = -F^{23}  (cyclic),  so B = curl A
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

from ..dual import partials, primal, stack
from ..emfield import EMSample

_RAISE = (1.0, -1.0, -1.0, -1.0)


def field_tensor(A: Callable[[Sequence[Any]], Any], x: Sequence[Any]) -> np.ndarray:
    """Antisymmetric ``F^{mu nu}`` at ``x``."""
    _, grads = partials(A, x)
    d = [np.asarray(primal(g), dtype=float) for g in grads]
    F = np.zeros((4, 4))
    for mu in range(4):
        for nu in range(mu + 1, 4):
            F[mu, nu] = _RAISE[mu] * d[mu][nu] - _RAISE[nu] * d[nu][mu]
            F[nu, mu] = -F[mu, nu]
    return F


def tensor_to_fields(F: np.ndarray):
    E = np.array([F[1, 0], F[2, 0], F[3, 0]])
    B = np.array([-F[2, 3], -F[3, 1], -F[1, 2]])
    return E, B


def fields_from_potential(A: Callable[[Sequence[Any]], Any], x: Sequence[Any]) -> EMSample:
    """``(eE, eB)`` from a potential; keeps dual numbers so it can be differentiated again."""
    _, d = partials(A, x)
    E = stack([-d[k][0] - d[0][k] for k in (1, 2, 3)])
    B = stack([d[2][3] - d[3][2], d[3][1] - d[1][3], d[1][2] - d[2][1]])
    return EMSample(E, B, tuple(x))


@dataclass(frozen=True)
class MaxwellSample:
    """Sources ``rho_e = div E``, ``J = curl B - dE/dt`` and the homogeneous residuals.

    ``scale`` is the largest single first derivative of any field component;
    dividing by it turns the residuals into relative ones.
    """

    rho: float
    J: np.ndarray
    div_B: float
    faraday: np.ndarray
    scale: float

    def relative(self, value) -> float:
        return float(np.max(np.abs(value))) / max(self.scale, 1e-300)


def maxwell_sources(fields: Callable[[Sequence[Any]], EMSample], x: Sequence[Any]) -> MaxwellSample:
    def packed(c):
        s = fields(c)
        return stack([s.E[0], s.E[1], s.E[2], s.B[0], s.B[1], s.B[2]])

    _, (dt, dx, dy, dz) = partials(packed, x)
    dt, dx, dy, dz = (np.asarray(primal(g), dtype=float) for g in (dt, dx, dy, dz))
    rho = dx[0] + dy[1] + dz[2]
    curl_B = np.array([dy[5] - dz[4], dz[3] - dx[5], dx[4] - dy[3]])
    curl_E = np.array([dy[2] - dz[1], dz[0] - dx[2], dx[1] - dy[0]])
    scale = float(max(np.max(np.abs(g)) for g in (dt, dx, dy, dz)))
    return MaxwellSample(float(rho), curl_B - dt[:3], float(dx[3] + dy[4] + dz[5]),
                         curl_E + dt[3:], scale)
