"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An input lies outside the region where a formula is defined."""


class SingularSpinorError(ArithmeticError):
    """``Psi tilde(Psi)`` vanished, so the spinor has no inverse."""

    def __init__(self, magnitude: float, point=None):
        self.magnitude = magnitude
        self.point = point
        super().__init__(f"singular spinor: |Psi tilde(Psi)| = {magnitude:.3e} at {point}")


class ConfigurationError(ValueError):
    """A run was requested with settings that cannot produce a valid result."""
