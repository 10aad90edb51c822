"""Spacetime-algebra kernel in the Dirac representation.

Matrices are plain ``(4, 4)`` complex numpy arrays; four-vectors are length-4
arrays of *contravariant* components ``(v^0, v^1, v^2, v^3)`` with metric
signature (+,-,-,-).  Every function is built from arithmetic operators only,
so the same code runs on :class:`~dirac_rdi.dual.Dual` arguments when a
derivative is wanted.

Conventions (lower-index generators)::

    gamma_0 = diag(I, -I)         gamma_k = [[0, -sigma_k], [sigma_k, 0]]
    alpha_k = gamma_k gamma_0     I5 = gamma_0 gamma_1 gamma_2 gamma_3

``I5`` is the unit pseudoscalar (``I5 @ I5 == -1``); ``GAMMA5`` is the usual
``i gamma^0 gamma^1 gamma^2 gamma^3``.
"""

from __future__ import annotations

import itertools

import numpy as np

from .dual import Dual, primal, stack, trace

I2 = np.eye(2, dtype=complex)
Z2 = np.zeros((2, 2), dtype=complex)
SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

I4 = np.eye(4, dtype=complex)
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

GAMMA = (
    np.block([[I2, Z2], [Z2, -I2]]),
    *(np.block([[Z2, -s], [s, Z2]]) for s in SIGMA),
)
# gamma^mu = g^{mu nu} gamma_nu
GAMMA_UP = tuple(METRIC[m, m] * GAMMA[m] for m in range(4))
ALPHA = tuple(GAMMA[k] @ GAMMA[0] for k in (1, 2, 3))
I5 = GAMMA[0] @ GAMMA[1] @ GAMMA[2] @ GAMMA[3]
GAMMA5 = 1j * GAMMA_UP[0] @ GAMMA_UP[1] @ GAMMA_UP[2] @ GAMMA_UP[3]
# gamma_2 gamma_1: the bivector acting as the unit imaginary on u_1
G21 = GAMMA[2] @ GAMMA[1]


def _build_basis():
    """The 16 blades gamma_A (products of distinct generators) with their grades."""
    blades, grades, names = [], [], []
    for grade in range(5):
        for combo in itertools.combinations(range(4), grade):
            m = I4.copy()
            for idx in combo:
                m = m @ GAMMA[idx]
            blades.append(m)
            grades.append(grade)
            names.append("".join(str(i) for i in combo) or "1")
    return tuple(blades), tuple(grades), tuple(names)


BASIS, BASIS_GRADES, BASIS_NAMES = _build_basis()
# Each blade squares to +-1, so its inverse is +-itself.
BASIS_INV = tuple(np.linalg.inv(b) for b in BASIS)


def gamma(index) -> np.ndarray:
    """Generator ``gamma_index`` (0..3), the pseudoscalar ``"i5"`` or ``"gamma5"``."""
    if index == "i5":
        return I5.copy()
    if index == "gamma5":
        return GAMMA5.copy()
    if isinstance(index, (int, np.integer)) and not isinstance(index, bool) and 0 <= index <= 3:
        return GAMMA[index].copy()
    raise ValueError(f"invalid gamma index {index!r}; expected 0..3, 'i5' or 'gamma5'")


def minkowski_dot(a, b):
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]


def slash(v):
    """``v^mu gamma_mu`` for contravariant components ``v``."""
    return v[0] * GAMMA[0] + v[1] * GAMMA[1] + v[2] * GAMMA[2] + v[3] * GAMMA[3]


def dagger(m):
    return m.conj().T


def tilde(m):
    """Reversion ``gamma_0 M^dagger gamma_0``."""
    return GAMMA[0] @ dagger(m) @ GAMMA[0]


def hestenes_embed(psi):
    """Matrix spinor whose first column is ``psi``.

    Built as the even multivector
    ``a1 + a4 alpha1 + b4 alpha2 + a3 alpha3 + I5 (b2 alpha1 - a2 alpha2 + b1 alpha3 + b3)``
    with ``psi_k = a_k + i b_k``, which fixes the sign pattern of columns 2-4.
    """
    a = [psi[k].real for k in range(4)]
    b = [psi[k].imag for k in range(4)]
    return (a[0] * I4 + a[3] * ALPHA[0] + b[3] * ALPHA[1] + a[2] * ALPHA[2]
            + b[1] * (I5 @ ALPHA[0]) - a[1] * (I5 @ ALPHA[1]) + b[0] * (I5 @ ALPHA[2])
            + b[2] * I5)


def hestenes_extract(m):
    return m[:, 0]


def multivector_coefficients(m):
    """Complex coefficients of ``m`` on the 16 blades, in ``BASIS`` order."""
    return stack([trace(m @ inv) / 4.0 for inv in BASIS_INV])


def scalar_pseudoscalar(m):
    """(s, p) such that the scalar + pseudoscalar part of ``m`` is ``s + p I5``."""
    s = trace(m) / 4.0
    # I5^{-1} = -I5
    p = -trace(m @ I5) / 4.0
    return s, p


def exp_pseudoscalar(angle):
    """``exp(I5 angle) = cos(angle) + I5 sin(angle)``."""
    return np.cos(angle) * I4 + np.sin(angle) * I5


def vector_components(m):
    """Contravariant components of the vector part of ``m`` plus a reality diagnostic.

    The components are the real parts of ``Tr(M gamma^mu)/4``.  The residue is
    the largest of the imaginary parts of those traces and the magnitudes of all
    non-vector blade coefficients: anything that stops ``m`` from being a real
    vector ``A^mu gamma_mu``.
    """
    comps = stack([trace(m @ g) / 4.0 for g in GAMMA_UP])
    coeffs = np.asarray(primal(multivector_coefficients(m)))
    vec = np.asarray(primal(comps))
    others = [abs(c) for c, g in zip(coeffs, BASIS_GRADES) if g != 1]
    residue = float(max(np.max(np.abs(vec.imag)), max(others)))
    return comps.real, residue


def boost(v):
    """Spinor boost for the three-velocity-like vector ``v`` (``v^0 = sqrt(1 + v.v)``).

    ``boost(v) @ gamma_0 @ tilde(boost(v)) == slash((v^0, v))``.
    """
    v0 = np.sqrt(1.0 + v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
    num = (1.0 + v0) * I4 + v[0] * ALPHA[0] + v[1] * ALPHA[1] + v[2] * ALPHA[2]
    return num / np.sqrt(2.0 * (1.0 + v0))


def _half_angle(theta_sq):
    # cos(|theta|/2) and sin(|theta|/2)/|theta|, smooth through theta = 0
    if primal(theta_sq) > 1e-8:
        mag = np.sqrt(theta_sq)
        return np.cos(mag / 2.0), np.sin(mag / 2.0) / mag
    t = theta_sq
    return (1.0 - t / 8.0 + t * t / 384.0,
            0.5 - t / 48.0 + t * t / 3840.0)


def rotor(theta):
    """``exp(-I5 theta^k alpha_k / 2)`` in closed half-angle form."""
    th2 = theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2]
    c, s_over = _half_angle(th2)
    gen = theta[0] * ALPHA[0] + theta[1] * ALPHA[1] + theta[2] * ALPHA[2]
    return c * I4 - s_over * (I5 @ gen)


def null_bivector(f1p, f2p):
    """``f1p (alpha1 + I5 alpha2) + f2p (alpha2 - I5 alpha1)``; squares to zero."""
    return f1p * (ALPHA[0] + I5 @ ALPHA[1]) + f2p * (ALPHA[1] - I5 @ ALPHA[0])


def null_bivector_exp(f1p, f2p, scale):
    """``exp(scale * null_bivector)``, which truncates after the linear term."""
    return I4 + scale * null_bivector(f1p, f2p)


def inverse(m):
    """Inverse of a matrix spinor via ``tilde(m) / (m tilde(m))``.

    Valid for spinors ``sqrt(rho) L exp(I5 beta / 2)``, where ``m tilde(m)`` is
    the scalar + pseudoscalar ``rho exp(I5 beta)``.
    """
    mt = tilde(m)
    s, p = scalar_pseudoscalar(m @ mt)
    den = s * s + p * p
    return mt @ ((s / den) * I4 - (p / den) * I5)


def is_dual_matrix(m) -> bool:
    return isinstance(m, Dual)
