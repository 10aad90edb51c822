"""Registered scenarios and the verification sweep run over them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

import numpy as np

from .. import rdi
from ..dual import derivative, primal
from ..emfield import EMSample
from ..report import LawResult, ResidualReport
from ..solutions import ellipse as ell
from ..solutions import instances, planar, volkov
from ..units import (SIParameters, ScaledParameters, cyclotron_omega, laser_omega,
                     nondimensionalize)
from .fields import fields_from_potential, maxwell_sources

Point = Sequence[Any]

DEFAULT_GRID = (7, 7, 7)
WIDTHS = 3.0

DEFAULT_TOLERANCES = {
    "dirac_residual": 1e-8,
    "reality": 1e-10,
    "inversion": 1e-8,
    "field_consistency": 1e-8,
    "faraday": 1e-9,
    "no_monopole": 1e-9,
    "source_free": 1e-9,
    "source_consistency": 1e-8,
    "maxwell_current": 1e-9,
    "current_conservation": 1e-8,
    "shape_preservation": 1e-10,
    "superluminality": 1.0,
    "scalar_gauge": 1e-8,
    "pz_ode": 1e-10,
    "ez_constant": 1e-10,
}
# coordinate shifts from quadrature carry a noise floor of their own
QUADRATURE_TOLERANCES = {"dirac_residual": 1e-5, "inversion": 1e-5, "current_conservation": 1e-5}


@dataclass
class Scenario:
    name: str
    family: str
    description: str
    spinor: Callable[[Point], Any]
    column: Callable[[Point], Any]
    potential: Callable[[Point], Any]
    fields: Callable[[Point], EMSample]
    center: Callable[[float], tuple]
    width: float
    span: float
    quadrature: bool = False
    scaled: Optional[ScaledParameters] = None
    si: dict = field(default_factory=dict)
    params: Any = None
    notes: list = field(default_factory=list)
    # family-specific laws on top of the common ones: "scalar_gauge", "bagrov"
    checks: tuple = ()

    def offsets(self, n: int) -> np.ndarray:
        return np.linspace(-WIDTHS * self.width, WIDTHS * self.width, n)

    def times(self, nt: int) -> np.ndarray:
        return np.arange(nt) * (self.span / nt)

    def grid(self, shape=DEFAULT_GRID) -> list:
        """Points covering one period in ``t`` and +-3 widths around the packet centre."""
        nt, nx, ny = shape
        ox_all, oy_all = self.offsets(nx), self.offsets(ny)
        pts = []
        for t in self.times(nt):
            cx, cy = self.center(t)
            pts.extend([float(t), cx + ox, cy + oy, 0.0] for ox in ox_all for oy in oy_all)
        return pts

    def random_points(self, n: int, seed: int) -> list:
        rng = np.random.default_rng(seed)
        pts = []
        for _ in range(n):
            t = float(rng.uniform(0.0, self.span))
            cx, cy = self.center(t)
            ox, oy = rng.uniform(-WIDTHS * self.width, WIDTHS * self.width, 2)
            pts.append([t, cx + float(ox), cy + float(oy), 0.0])
        return pts


# -- builders ------------------------------------------------------------------------

def ellipse_scenario(name: str, params: ell.EllipseParams, scaled=None, si=None) -> Scenario:
    spec = params.spec()
    return Scenario(
        name=name, family="planar",
        description="Gaussian packet carried around an ellipse by crossed fields",
        spinor=planar.planar_field(spec),
        column=lambda x: planar.planar_spinor(spec, x),
        potential=lambda x: planar.planar_potential(spec, x),
        fields=lambda x: ell.ellipse_fields(params, x),
        center=lambda t: tuple(float(c) for c in params.path(t)),
        width=1.0 / np.sqrt(params.eB), span=params.period,
        scaled=scaled, si=si or {}, params=params)


def circle_scenario(name: str, p: instances.CircleParams, scaled=None, si=None,
                    notes=None) -> Scenario:
    spec = instances.redmond_circle(p)
    w = p.omega

    def center(t):
        S = spec.shift(w * t)
        return -float(S[0]), -float(S[1])

    return Scenario(
        name=name, family="volkov",
        description="Packet circling in a circularly polarized wave plus uniform Bz",
        spinor=volkov.volkov_field(spec),
        column=lambda x: volkov.volkov_spinor(spec, x),
        potential=lambda x: volkov.volkov_potential(spec, x),
        fields=lambda x: volkov.volkov_fields(spec, x),
        center=center, width=1.0 / np.sqrt(p.eB), span=2.0 * np.pi / w,
        scaled=scaled, si=si or {}, params=(p, spec), notes=notes or [],
        checks=("scalar_gauge",))


def bagrov_scenario(name: str, p: instances.CircleParams, a: float,
                    gauge_phase: Optional[Callable] = None) -> Scenario:
    """Circular drive plus the source-free longitudinal field.

    The gauge phase defaults to ``xi / omega``; any smooth choice is allowed
    and this one avoids nested quadrature.
    """
    if a <= 0:
        raise ValueError("the sweep runs xi over [0, 2 pi), which needs a > 0")
    base = instances.bagrov_circle(p, a)
    phase = gauge_phase or (lambda xi, x, y: xi / p.omega)
    spec = volkov.VolkovFamilySpec(**{**base.__dict__, "Phi": phase})
    w = p.omega

    def center(t):
        S = volkov.shifts(spec, w * t)
        return -float(primal(S[0])), -float(primal(S[1]))

    return Scenario(
        name=name, family="volkov",
        description="Circular drive with uniform Bz and the source-free longitudinal E",
        spinor=volkov.volkov_field(spec),
        column=lambda x: volkov.volkov_spinor(spec, x),
        potential=lambda x: volkov.volkov_potential(spec, x),
        fields=lambda x: volkov.volkov_fields(spec, x),
        center=center, width=1.0 / np.sqrt(p.eB), span=2.0 * np.pi / w,
        quadrature=True, params=(p, spec, a), checks=("bagrov",))


FIG1_SI = {"B": 0.35, "a1": 1e-6, "a2": 2e-6, "omega": 0.5e9}
FIG2_SI = {"B": 0.13, "a0": 3.24, "wavelength": 800e-9}


def fig1_scenario(name: str = "ellipse-fig1", **overrides) -> Scenario:
    si = {**FIG1_SI, **overrides}
    scaled = nondimensionalize(SIParameters(omega=si["omega"], B=si["B"], a1=si["a1"], a2=si["a2"]))
    params = ell.EllipseParams(a1=scaled.a1, a2=scaled.a2, eB=scaled.eB, omega=scaled.omega)
    return ellipse_scenario(name, params, scaled, si)


def fig2_scenario(name: str = "redmond-fig2", omega_source: str = "laser", **overrides) -> Scenario:
    """Circle scenario from SI inputs; ``omega_source`` picks the laser or cyclotron frequency."""
    si = {**FIG2_SI, **overrides}
    omegas = {"laser": laser_omega(si["wavelength"]), "cyclotron": cyclotron_omega(si["B"])}
    if omega_source not in omegas:
        raise ValueError(f"omega_source must be 'laser' or 'cyclotron', got {omega_source!r}")
    omega = omegas[omega_source]
    si = {**si, "omega": omega, "omega_source": omega_source,
          "omega_laser": omegas["laser"], "omega_cyclotron": omegas["cyclotron"]}
    scaled = nondimensionalize(SIParameters(omega=omega, B=si["B"], a0=si["a0"]))
    p = instances.CircleParams(a0=scaled.ea0, eB=scaled.eB, omega=scaled.omega)
    return circle_scenario(name, p, scaled, si)


SCENARIOS: dict[str, Callable[[], Scenario]] = {
    "ellipse-fig1": lambda: fig1_scenario("ellipse-fig1"),
    "ellipse-relativistic": lambda: ellipse_scenario(
        "ellipse-relativistic", ell.EllipseParams(a1=0.8, a2=1.2, eB=0.7, omega=0.6)),
    "redmond-fig2": lambda: fig2_scenario("redmond-fig2"),
    "redmond-circle-fig2": lambda: fig2_scenario("redmond-circle-fig2"),
    "redmond-relativistic": lambda: circle_scenario(
        "redmond-relativistic", instances.CircleParams(a0=0.4, eB=0.7, omega=0.6)),
    "bagrov-sourcefree": lambda: bagrov_scenario(
        "bagrov-sourcefree", instances.CircleParams(a0=0.4, eB=0.7, omega=0.6), a=1.5),
}


def get_scenario(name: str) -> Scenario:
    try:
        return SCENARIOS[name]()
    except KeyError:
        raise ValueError(f"unknown scenario {name!r}; known: {', '.join(sorted(SCENARIOS))}") from None


# -- laws -------------------------------------------------------------------------------

def _rel(diff, ref) -> float:
    diff = np.asarray(primal(diff))
    ref = np.asarray(primal(ref))
    return float(np.linalg.norm(diff)) / max(float(np.linalg.norm(ref)), 1e-300)


def _packed(sample: EMSample):
    return np.concatenate([np.asarray(primal(sample.E), float), np.asarray(primal(sample.B), float)])


def _dirac_laws(sc: Scenario, pts, tol) -> list:
    residual, reality, inversion, conservation = [], [], [], []
    for x in pts:
        residual.append(rdi.dirac_residual(sc.column, sc.potential, x))
        A, residue = rdi.invert_potential(sc.spinor, x)
        reality.append(residue)
        closed = np.asarray(primal(sc.potential(x)))
        inversion.append(_rel(np.asarray(A) - closed, closed))
        conservation.append(rdi.current_conservation_residual(sc.column, x))
    return [LawResult.from_samples("dirac_residual", residual, tol["dirac_residual"]),
            LawResult.from_samples("reality", reality, tol["reality"]),
            LawResult.from_samples("inversion", inversion, tol["inversion"]),
            LawResult.from_samples("current_conservation", conservation, tol["current_conservation"])]


def _maxwell_laws(sc: Scenario, pts, tol) -> tuple[list, list]:
    consistency, faraday, monopole, samples = [], [], [], []
    for x in pts:
        derived = _packed(fields_from_potential(sc.potential, x))
        closed = _packed(sc.fields(x))
        consistency.append(_rel(derived - closed, closed))
        m = maxwell_sources(sc.fields, x)
        faraday.append(m.relative(m.faraday))
        monopole.append(m.relative(m.div_B))
        samples.append(m)
    return [LawResult.from_samples("field_consistency", consistency, tol["field_consistency"]),
            LawResult.from_samples("faraday", faraday, tol["faraday"]),
            LawResult.from_samples("no_monopole", monopole, tol["no_monopole"])], samples


def shape_errors(sc: Scenario, n_times: int = 16, n_side: int = 7) -> list:
    """Max deviation of the normalized comoving density from its ``t = 0`` copy."""
    spec = sc.params.spec()
    offsets = sc.offsets(n_side)

    def normalized(t):
        cx, cy = sc.center(t)
        d = np.array([[planar.planar_density(spec, [t, cx + ox, cy + oy, 0.0])
                       for oy in offsets] for ox in offsets])
        return d / d.sum()

    ref = normalized(0.0)
    return [float(np.max(np.abs(normalized(t) - ref)) / np.max(ref))
            for t in sc.times(n_times)]


def _planar_laws(sc: Scenario, pts, maxwell, tol, shape) -> list:
    p: ell.EllipseParams = sc.params
    current = []
    for x, m in zip(pts, maxwell):
        # uniform B: the source must be rho_e = 0 and J = -dE/dt
        dEdt = np.asarray(primal(derivative(lambda s: sc.fields([s, x[1], x[2], x[3]]).E, x[0])))
        current.append(max(m.relative(m.rho), m.relative(m.J + dEdt)))
    beta = p.omega * max(p.a1, p.a2)
    return [LawResult.from_samples("maxwell_current", current, tol["maxwell_current"]),
            LawResult.from_samples("shape_preservation", shape_errors(sc, 16, shape[1]),
                                   tol["shape_preservation"]),
            LawResult.from_samples("superluminality", [beta], tol["superluminality"])]


def _volkov_laws(sc: Scenario, pts, maxwell, tol) -> list:
    spec = sc.params[1]
    free, consistency = [], []
    for x, m in zip(pts, maxwell):
        rho, J = volkov.volkov_sources(spec, x)
        closed = np.concatenate([[float(primal(rho))], np.asarray(primal(J), float)])
        numeric = np.concatenate([[m.rho], m.J])
        free.append(m.relative(numeric))
        consistency.append(m.relative(numeric - closed))
    out = [LawResult.from_samples("source_consistency", consistency, tol["source_consistency"]),
           LawResult.from_samples("source_free", free, tol["source_free"])]
    if "scalar_gauge" in sc.checks:
        gauge = []
        for x in pts:
            A = np.asarray(primal(sc.potential(x)))
            gauge.append(abs(A[0]) / max(float(np.linalg.norm(A)), 1e-300))
        out.append(LawResult.from_samples("scalar_gauge", gauge, tol["scalar_gauge"]))
    return out


def _bagrov_laws(sc: Scenario, pts, tol) -> list:
    p, spec, a = sc.params
    xis = np.linspace(0.0, 2.0 * np.pi, 100)
    ode = [instances.bagrov_ode_residual(instances.bagrov_pz(xi, a),
                                         *instances.bagrov_pz_derivatives(xi, a)) for xi in xis]
    target = -p.omega / a
    ez = [abs(float(primal(sc.fields(x).E[2])) - target) / abs(target) for x in pts]
    return [LawResult.from_samples("pz_ode", ode, tol["pz_ode"]),
            LawResult.from_samples("ez_constant", ez, tol["ez_constant"])]


def resolve_tolerances(sc: Scenario, overrides: Optional[dict] = None) -> dict:
    tol = dict(DEFAULT_TOLERANCES)
    if sc.quadrature:
        tol.update(QUADRATURE_TOLERANCES)
    for key in overrides or {}:
        if key not in tol:
            raise ValueError(f"unknown law {key!r}; known: {', '.join(sorted(tol))}")
    tol.update(overrides or {})
    return tol


def run_verification(scenario, grid=DEFAULT_GRID, tolerances: Optional[dict] = None,
                     seed: int = 0, random_points: int = 0) -> ResidualReport:
    """Evaluate every applicable law for ``scenario`` on the grid.

    ``random_points`` extra points drawn with ``seed`` are added to the grid.
    The result depends only on the arguments, so repeated runs agree bit for bit.
    """
    sc = scenario if isinstance(scenario, Scenario) else get_scenario(scenario)
    tol = resolve_tolerances(sc, tolerances)
    pts = sc.grid(grid) + sc.random_points(random_points, seed)
    report = ResidualReport(sc.name)
    for law in _dirac_laws(sc, pts, tol):
        report.add(law)
    laws, maxwell = _maxwell_laws(sc, pts, tol)
    for law in laws:
        report.add(law)
    if sc.family == "planar":
        extra = _planar_laws(sc, pts, maxwell, tol, grid)
    else:
        extra = _volkov_laws(sc, pts, maxwell, tol)
        if "bagrov" in sc.checks:
            extra += _bagrov_laws(sc, pts, tol)
    for law in extra:
        report.add(law)
    return report
