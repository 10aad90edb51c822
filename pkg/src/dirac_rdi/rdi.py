"""Dynamical inversion: spinor fields in, four-potentials and diagnostics out.

A spinor field is any callable taking a spacetime point ``(t, x, y, z)``
(internal units, ``c = hbar = m = 1``) and returning a 4x4 matrix spinor.  It
must accept dual-number coordinates; derivatives are taken by forward mode.

The potential follows from the matrix Dirac equation

    dslash(Psi) G21 - eA Psi = m Psi gamma_0
    =>  eA = dslash(Psi) G21 Psi^{-1} - m Psi gamma_0 Psi^{-1}

with ``dslash = gamma^mu d_mu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import sta
from .dual import partials, primal, stack
from .errors import DomainError, SingularSpinorError
from .report import LawResult

SINGULAR_THRESHOLD = 1e-300
RESIDUAL_FLOOR = 1e-300

Point = Sequence[Any]


@dataclass(frozen=True)
class SpinorParameterization:
    """Local Lorentz data: density, boost argument, rotation angles, duality angle."""

    rho: Callable[[Point], Any]
    velocity: Callable[[Point], Sequence[Any]]
    theta: Callable[[Point], Sequence[Any]]
    beta: Callable[[Point], Any]


@dataclass(frozen=True)
class SpinorField:
    """Matrix-spinor valued field ``x -> Psi(x)``."""

    fn: Callable[[Point], Any]

    def __call__(self, x: Point):
        return self.fn(x)

    def column(self, x: Point):
        return sta.hestenes_extract(self.fn(x))


def build_spinor(p: SpinorParameterization) -> SpinorField:
    """``sqrt(rho) B(v) R(theta) exp(I5 beta / 2)`` as a field."""

    def psi(x):
        rho = p.rho(x)
        if not primal(rho) > 0:
            raise DomainError(f"rho must be positive, got {primal(rho)!r} at {list(map(primal, x))}")
        return (np.sqrt(rho) * sta.boost(p.velocity(x)) @ sta.rotor(p.theta(x))
                @ sta.exp_pseudoscalar(p.beta(x) / 2.0))

    return SpinorField(psi)


def _check_invertible(psi, x):
    s, p = sta.scalar_pseudoscalar(psi @ sta.tilde(psi))
    mag = float(abs(complex(primal(s)) + 1j * complex(primal(p))))
    if not mag > SINGULAR_THRESHOLD:
        raise SingularSpinorError(mag, [float(np.real(primal(c))) for c in x])


def potential_matrix(field: Callable[[Point], Any], x: Point, m: float = 1.0):
    """The matrix ``eA`` before projection onto its vector part."""
    psi, grads = partials(field, x)
    _check_invertible(psi, x)
    inv = sta.inverse(psi)
    dslash = sum(sta.GAMMA_UP[mu] @ grads[mu] for mu in range(4))
    return dslash @ sta.G21 @ inv - m * (psi @ sta.GAMMA[0] @ inv)


def invert_potential(field: Callable[[Point], Any], x: Point, m: float = 1.0):
    """Contravariant ``eA^mu`` at ``x`` and the reality residue of the inversion.

    A residue above round-off means no real electromagnetic potential drives
    the requested spinor evolution.
    """
    return sta.vector_components(potential_matrix(field, x, m))


def potential_field(field: Callable[[Point], Any], m: float = 1.0) -> Callable[[Point], Any]:
    """``x -> eA(x)`` from inversion, differentiable again for field tensors."""
    return lambda x: invert_potential(field, x, m)[0]


def _dirac_operator(psi, grads, A, m):
    kinetic = sum(sta.GAMMA_UP[mu] @ grads[mu] for mu in range(4))
    return 1j * kinetic - sta.slash(A) @ psi - m * psi


def _norm(v) -> float:
    return float(np.linalg.norm(np.asarray(primal(v))))


def dirac_residual(psi: Callable[[Point], Any], A: Callable[[Point], Any], x: Point,
                   m: float = 1.0, floor: float = RESIDUAL_FLOOR) -> float:
    """``|i gamma^mu d_mu psi - eA_mu gamma^mu psi - m psi| / max(|m psi|, floor)``.

    ``psi`` maps a point to a Dirac column and ``A`` to contravariant ``eA^mu``.
    """
    value, grads = partials(psi, x)
    pot = A([primal(c) for c in x])
    r = _dirac_operator(value, grads, np.asarray(primal(pot)), m)
    return _norm(r) / max(_norm(m * value), floor)


def central_difference(fn: Callable[[Point], Any], x: Point, h: float) -> list:
    """Second-order central differences in each coordinate."""
    x = [float(c) for c in x]
    grads = []
    for k in range(len(x)):
        hi, lo = list(x), list(x)
        hi[k] += h
        lo[k] -= h
        grads.append((np.asarray(fn(hi)) - np.asarray(fn(lo))) / (2.0 * h))
    return grads


def dirac_residual_fd(psi: Callable[[Point], Any], A: Callable[[Point], Any], x: Point,
                      m: float = 1.0, h: float = 1e-5, floor: float = RESIDUAL_FLOOR) -> float:
    """Same as :func:`dirac_residual` with finite-difference derivatives."""
    x = [float(c) for c in x]
    value = np.asarray(psi(x))
    r = _dirac_operator(value, central_difference(psi, x, h), np.asarray(A(x)), m)
    return _norm(r) / max(_norm(m * value), floor)


def attainability_check(field: Callable[[Point], Any], points: Iterable[Point],
                        tol: float = 1e-10, m: float = 1.0) -> LawResult:
    """Largest reality residue of the inverted potential over ``points``."""
    residues = [invert_potential(field, x, m)[1] for x in points]
    return LawResult.from_samples("reality", residues, tol)


# -- observables ---------------------------------------------------------------

_CURRENT_OPS = tuple(sta.GAMMA_UP[0] @ g for g in sta.GAMMA_UP)
_SPIN_OPS = tuple(sta.GAMMA5 @ op for op in _CURRENT_OPS)


def _bilinears(psi, ops):
    conj = psi.conj()
    return stack([(conj @ (op @ psi)).real for op in ops])


def dirac_current(psi):
    """``J^mu = psi^dagger gamma^0 gamma^mu psi``."""
    return _bilinears(psi, _CURRENT_OPS)


def spin_density(psi):
    """``(rho s)^mu = psi^dagger gamma5 gamma^0 gamma^mu psi``."""
    return _bilinears(psi, _SPIN_OPS)


def current_from_matrix(Psi):
    """Vector part of ``Psi gamma_0 tilde(Psi)``."""
    return sta.vector_components(Psi @ sta.GAMMA[0] @ sta.tilde(Psi))[0]


def spin_from_matrix(Psi):
    """Vector part of ``Psi gamma_3 tilde(Psi)``."""
    return sta.vector_components(Psi @ sta.GAMMA[3] @ sta.tilde(Psi))[0]


def density_angle(Psi):
    """``(rho, beta)`` from ``Psi tilde(Psi) = rho exp(I5 beta)``."""
    s, p = sta.scalar_pseudoscalar(Psi @ sta.tilde(Psi))
    s, p = np.real(s), np.real(p)
    return np.sqrt(s * s + p * p), np.arctan2(p, s)


def _divergence(fn, x):
    _, grads = partials(fn, x)
    return sum(grads[mu][mu] for mu in range(4))


def current_conservation_residual(psi: Callable[[Point], Any], x: Point) -> float:
    """``|d_mu J^mu| / |J^0|``."""
    div = _divergence(lambda c: dirac_current(psi(c)), x)
    j0 = dirac_current(np.asarray(primal(psi([primal(c) for c in x]))))[0]
    return abs(float(primal(div))) / max(abs(float(j0)), RESIDUAL_FLOOR)


def spin_divergence_residual(psi: Callable[[Point], Any], x: Point, m: float = 1.0) -> float:
    """``|d_mu (rho s^mu) / 2 + m rho sin(beta)| / |J^0|``.

    ``rho sin(beta)`` is the pseudoscalar part of ``Psi tilde(Psi)``.
    """
    div = _divergence(lambda c: spin_density(psi(c)), x)
    col = np.asarray(primal(psi([primal(c) for c in x])))
    Psi = sta.hestenes_embed(col)
    _, p = sta.scalar_pseudoscalar(Psi @ sta.tilde(Psi))
    val = 0.5 * float(primal(div)) + m * float(np.real(p))
    return abs(val) / max(abs(float(dirac_current(col)[0])), RESIDUAL_FLOOR)


def l2_normalization(density: np.ndarray, cell_volume: float) -> float:
    """Constant ``N`` such that ``N**2 * sum(density) * cell_volume == 1``."""
    total = float(np.sum(density)) * cell_volume
    if not total > 0:
        raise DomainError("density integrates to zero on this grid")
    return 1.0 / np.sqrt(total)
