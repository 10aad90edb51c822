"""Field analysis, classical trajectories and scenario verification."""

from .boris import Trajectory, lorentz_push
from .fields import MaxwellSample, field_tensor, fields_from_potential, maxwell_sources, tensor_to_fields
from .larmor import LarmorEstimate, larmor_estimate, larmor_power
from .scenarios import SCENARIOS, Scenario, get_scenario, run_verification

__all__ = [
    "LarmorEstimate", "MaxwellSample", "SCENARIOS", "Scenario", "Trajectory", "field_tensor",
    "fields_from_potential", "get_scenario", "larmor_estimate", "larmor_power", "lorentz_push",
    "maxwell_sources", "run_verification", "tensor_to_fields",
]
