"""Closed-form solution families and their named instances."""

from .ellipse import EllipseParams, ellipse_fields, ellipse_limit_fields
from .instances import (CircleParams, circle_observables_closed_form, bagrov_circle, bagrov_pz,
                        redmond_circle)
from .planar import (PlanarTransportSpec, planar_field, planar_potential, planar_spinor)
from .volkov import (VolkovFamilySpec, volkov_field, volkov_fields, volkov_potential,
                     volkov_sources, volkov_spinor)

__all__ = [
    "CircleParams", "EllipseParams", "PlanarTransportSpec", "VolkovFamilySpec",
    "circle_observables_closed_form", "bagrov_circle", "bagrov_pz", "ellipse_fields",
    "ellipse_limit_fields", "planar_field", "planar_potential", "planar_spinor",
    "redmond_circle", "volkov_field", "volkov_fields", "volkov_potential", "volkov_sources",
    "volkov_spinor",
]
