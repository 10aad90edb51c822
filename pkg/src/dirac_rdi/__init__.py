"""Relativistic dynamical inversion for the Dirac equation.

Prescribe how a Dirac wavepacket should move, invert the matrix form of the
Dirac equation for the four-potential that drives it, and check the result.
"""

from .emfield import EMSample
from .errors import ConfigurationError, DomainError, SingularSpinorError
from .rdi import (SpinorField, SpinorParameterization, attainability_check, build_spinor,
                  current_conservation_residual, dirac_current, dirac_residual,
                  invert_potential, spin_density)
from .report import LawResult, ResidualReport

__all__ = [
    "ConfigurationError", "DomainError", "EMSample", "LawResult", "ResidualReport",
    "SingularSpinorError", "SpinorField", "SpinorParameterization", "attainability_check",
    "build_spinor", "current_conservation_residual", "dirac_current", "dirac_residual",
    "invert_potential", "spin_density",
]
