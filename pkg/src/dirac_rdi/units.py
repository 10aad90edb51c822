"""SI <-> internal unit conversion.

Internal units set ``c = hbar = m_e = 1``: lengths in reduced Compton
wavelengths ``hbar/(m c)``, times in ``hbar/(m c^2)``, and field strengths as
``eE``, ``eB`` in units of the critical fields ``m^2 c^3/(e hbar)`` and
``m^2 c^2/(e hbar)``.  Scenarios are also described by the dimensionless groups

    beta_i = a_i w / c,   b = eB / (m w),   mu = m c^2 / (hbar w),   a0~ = e a0 / (m w)

from which the internal values follow as ``w = 1/mu``, ``a_i = beta_i mu``,
``eB = b / mu`` and ``e a0 = a0~ / mu``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional


@dataclass(frozen=True)
class Constants:
    c: float
    h: float
    e: float
    m_e: float
    epsilon_0: float
    alpha: float

    @property
    def hbar(self) -> float:
        return self.h / (2.0 * math.pi)

    @property
    def electron_rest_energy(self) -> float:
        return self.m_e * self.c ** 2

    @property
    def length_unit(self) -> float:
        return self.hbar / (self.m_e * self.c)

    @property
    def time_unit(self) -> float:
        return self.hbar / (self.m_e * self.c ** 2)

    @property
    def critical_B(self) -> float:
        return self.m_e ** 2 * self.c ** 2 / (self.e * self.hbar)

    @property
    def critical_E(self) -> float:
        return self.critical_B * self.c

    def table(self) -> dict:
        out = asdict(self)
        out["hbar"] = self.hbar
        out["source"] = "CODATA 2018"
        return out


# Exact SI-defining values plus the 2018 adjustment for m_e, epsilon_0, alpha.
CODATA_2018 = Constants(
    c=299792458.0,
    h=6.62607015e-34,
    e=1.602176634e-19,
    m_e=9.1093837015e-31,
    epsilon_0=8.8541878128e-12,
    alpha=7.2973525693e-3,
)


@dataclass(frozen=True)
class SIParameters:
    """Scenario inputs in SI units; unused entries stay ``None``."""

    omega: float
    B: float = 0.0
    a1: Optional[float] = None
    a2: Optional[float] = None
    a0: Optional[float] = None


@dataclass(frozen=True)
class ScaledParameters:
    mu: float
    b: float
    beta1: Optional[float] = None
    beta2: Optional[float] = None
    a0_tilde: Optional[float] = None

    # internal-unit values used by the solution families
    @property
    def omega(self) -> float:
        return 1.0 / self.mu

    @property
    def eB(self) -> float:
        return self.b / self.mu

    @property
    def a1(self) -> Optional[float]:
        return None if self.beta1 is None else self.beta1 * self.mu

    @property
    def a2(self) -> Optional[float]:
        return None if self.beta2 is None else self.beta2 * self.mu

    @property
    def ea0(self) -> Optional[float]:
        return None if self.a0_tilde is None else self.a0_tilde / self.mu

    def to_dict(self) -> dict:
        out = asdict(self)
        out.update(omega_internal=self.omega, eB_internal=self.eB, a1_internal=self.a1,
                   a2_internal=self.a2, ea0_internal=self.ea0)
        return out


def nondimensionalize(si: SIParameters, k: Constants = CODATA_2018) -> ScaledParameters:
    w = si.omega
    m, c, e = k.m_e, k.c, k.e

    def opt(v, scale):
        return None if v is None else v * scale

    return ScaledParameters(
        mu=m * c * c / (k.hbar * w),
        b=e * si.B / (m * w),
        beta1=opt(si.a1, w / c),
        beta2=opt(si.a2, w / c),
        a0_tilde=opt(si.a0, e / (m * w)),
    )


def to_si(s: ScaledParameters, k: Constants = CODATA_2018) -> SIParameters:
    """Inverse of :func:`nondimensionalize`."""
    m, c, e = k.m_e, k.c, k.e
    w = m * c * c / (k.hbar * s.mu)

    def opt(v, scale):
        return None if v is None else v * scale

    return SIParameters(omega=w, B=s.b * m * w / e, a1=opt(s.beta1, c / w),
                        a2=opt(s.beta2, c / w), a0=opt(s.a0_tilde, m * w / e))


def cyclotron_omega(B: float, k: Constants = CODATA_2018) -> float:
    """``eB / m`` in s^-1."""
    return k.e * B / k.m_e


def laser_omega(wavelength: float, k: Constants = CODATA_2018) -> float:
    return 2.0 * math.pi * k.c / wavelength


def intensity_from_field(B_amplitude: float, k: Constants = CODATA_2018) -> float:
    """Cycle-averaged intensity (W/cm^2) of a circularly polarized wave with magnetic amplitude B."""
    E = B_amplitude * k.c
    # circular polarization: |E| constant, I = eps0 c E^2
    return k.epsilon_0 * k.c * E * E / 1e4
