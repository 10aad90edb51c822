"""Command line front end: ``run``, ``verify``, ``list-scenarios`` and ``schema``.

Exit codes: 0 every law passes, 1 a physics law fails, 2 bad configuration,
3 the output could not be written.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

import jsonschema
import numpy as np
import tomli

from .dual import derivative, primal
from .errors import ConfigurationError, DomainError
from .report import REPORT_SCHEMA, ResidualReport
from .solutions import ellipse as ell
from .solutions import instances, planar, volkov
from .units import (CODATA_2018, SIParameters, cyclotron_omega, intensity_from_field,
                    laser_omega, nondimensionalize)
from .verify import scenarios as scn
from .verify.boris import lorentz_push
from .verify.larmor import larmor_estimate

OUT_ENV = "DIRAC_RDI_OUT"

EXIT_PASS, EXIT_PHYSICS, EXIT_CONFIG, EXIT_IO = 0, 1, 2, 3

# Quoted intensity for the 800 nm circle scenario, recorded for comparison only.
QUOTED_FIG2_INTENSITY = 1e21

_positive = {"type": "number", "exclusiveMinimum": 0}

CONFIG_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "dirac-rdi scenario config (SI units)",
    "type": "object",
    "required": ["scenario", "parameters"],
    "additionalProperties": False,
    "properties": {
        "scenario": {
            "type": "object",
            "required": ["name", "family"],
            "additionalProperties": False,
            "properties": {
                "name": {"type": "string", "pattern": "^[A-Za-z0-9_.-]+$"},
                "family": {"enum": ["planar", "volkov", "redmond", "bagrov"]},
            },
        },
        "parameters": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "B": _positive,
                "a1": {"type": "number", "minimum": 0},
                "a2": {"type": "number", "minimum": 0},
                "omega": _positive,
                "a0": {"type": "number", "minimum": 0},
                "wavelength": _positive,
                "omega_source": {"enum": ["laser", "cyclotron", "given"]},
                "a": _positive,
            },
        },
        "grid": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "shape": {"type": "array", "items": {"type": "integer", "minimum": 1},
                          "minItems": 3, "maxItems": 3},
                "random_points": {"type": "integer", "minimum": 0},
                "seed": {"type": "integer", "minimum": 0},
            },
        },
        "output": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "dir": {"type": "string"},
                "times": {"type": "integer", "minimum": 1},
                "points": {"type": "integer", "minimum": 2},
                "path_samples": {"type": "integer", "minimum": 1},
            },
        },
        "trajectory": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "steps": {"type": "integer", "minimum": 1},
                "periods": {"type": "number", "exclusiveMinimum": 0},
                "offsets": {"type": "array",
                            "items": {"type": "array", "items": {"type": "number"},
                                      "minItems": 2, "maxItems": 2}},
            },
        },
        "tolerances": {
            "type": "object",
            "additionalProperties": _positive,
        },
    },
}

REQUIRED_PARAMETERS = {
    "planar": ("B", "a1", "a2", "omega"),
    "redmond": ("B", "a0"),
    "volkov": ("B", "a0"),
    "bagrov": ("B", "a0", "a"),
}


class ConfigError(Exception):
    """Invalid configuration; ``kind`` is a short machine-readable tag."""

    def __init__(self, kind: str, message: str, path: Optional[str] = None):
        super().__init__(message)
        self.kind = kind
        self.path = path

    def to_dict(self) -> dict:
        return {"error": self.kind, "message": str(self), "path": self.path}


@dataclass
class GridSpec:
    shape: tuple = scn.DEFAULT_GRID
    random_points: int = 0
    seed: int = 0


@dataclass
class OutputSpec:
    dir: Optional[str] = None
    times: int = 4
    points: int = 21
    path_samples: int = 256


@dataclass
class TrajectorySpec:
    steps: int = 4000
    periods: float = 1.0
    # starting offsets from the packet centre, in packet widths
    offsets: list = field(default_factory=lambda: [[0.0, 0.0], [1.0, 0.0], [0.0, -1.0]])


@dataclass
class ScenarioConfig:
    name: str
    family: str
    parameters: dict
    grid: GridSpec = field(default_factory=GridSpec)
    output: OutputSpec = field(default_factory=OutputSpec)
    trajectory: TrajectorySpec = field(default_factory=TrajectorySpec)
    tolerances: dict = field(default_factory=dict)


def parse_grid(text: str) -> tuple:
    try:
        shape = tuple(int(p) for p in text.lower().split("x"))
    except ValueError:
        shape = ()
    if len(shape) != 3 or min(shape) < 1:
        raise ConfigError("grid", f"grid must look like 7x7x7, got {text!r}")
    return shape


def parse_tolerances(items) -> dict:
    out = {}
    for item in items or []:
        law, sep, value = item.partition("=")
        try:
            tol = float(value)
        except ValueError:
            tol = -1.0
        if not sep or not tol > 0:
            raise ConfigError("tolerance", f"expected law=positive-number, got {item!r}")
        out[law.strip()] = tol
    return out


def validate_config(data: dict) -> ScenarioConfig:
    validator = jsonschema.Draft202012Validator(CONFIG_SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise ConfigError("schema", e.message, "/".join(str(p) for p in e.absolute_path) or None)
    family = data["scenario"]["family"]
    params = dict(data["parameters"])
    missing = [k for k in REQUIRED_PARAMETERS[family] if k not in params]
    if missing:
        raise ConfigError("missing_parameter", f"family {family!r} needs {', '.join(missing)}",
                          "parameters")
    if family == "planar":
        beta = params["omega"] * max(params["a1"], params["a2"]) / CODATA_2018.c
        if not beta < 1.0:
            raise ConfigError("superluminality",
                              f"superluminality guard: omega * max(a1, a2) / c = {beta:.6g} >= 1",
                              "parameters")
    else:
        source = params.setdefault("omega_source", "laser" if "wavelength" in params else "given")
        need = {"laser": "wavelength", "given": "omega", "cyclotron": None}[source]
        if need and need not in params:
            raise ConfigError("missing_parameter", f"omega_source {source!r} needs {need!r}",
                              "parameters")
    grid = GridSpec(**data.get("grid", {}))
    grid.shape = tuple(grid.shape)
    return ScenarioConfig(
        name=data["scenario"]["name"], family=family, parameters=params, grid=grid,
        output=OutputSpec(**data.get("output", {})),
        trajectory=TrajectorySpec(**data.get("trajectory", {})),
        tolerances=dict(data.get("tolerances", {})))


def load_config(path) -> ScenarioConfig:
    try:
        with open(path, "rb") as fh:
            data = tomli.load(fh)
    except OSError as exc:
        raise ConfigError("io", f"cannot read config: {exc}", str(path)) from None
    except (tomli.TOMLDecodeError, UnicodeDecodeError) as exc:
        raise ConfigError("parse", f"not valid TOML: {exc}", str(path)) from None
    return validate_config(data)


# -- scenario construction ---------------------------------------------------------------

def _wave_omega(params: dict) -> tuple[float, dict]:
    omegas = {"cyclotron": cyclotron_omega(params["B"])}
    if "wavelength" in params:
        omegas["laser"] = laser_omega(params["wavelength"])
    if "omega" in params:
        omegas["given"] = params["omega"]
    return omegas[params["omega_source"]], omegas


def build_scenario(cfg: ScenarioConfig) -> tuple[scn.Scenario, list]:
    """Scenario plus the notes that go into the manifest."""
    p = cfg.parameters
    notes = []
    try:
        if cfg.family == "planar":
            scaled = nondimensionalize(SIParameters(omega=p["omega"], B=p["B"], a1=p["a1"], a2=p["a2"]))
            params = ell.EllipseParams(a1=scaled.a1, a2=scaled.a2, eB=scaled.eB, omega=scaled.omega)
            sc = scn.ellipse_scenario(cfg.name, params, scaled, dict(p))
            return sc, notes
        omega, omegas = _wave_omega(p)
        scaled = nondimensionalize(SIParameters(omega=omega, B=p["B"], a0=p["a0"]))
        circle = instances.CircleParams(a0=scaled.ea0, eB=scaled.eB, omega=scaled.omega)
        si = {**p, "omega": omega, **{f"omega_{k}": v for k, v in omegas.items()}}
        if "laser" in omegas:
            notes.append({
                "topic": "omega",
                "message": ("the wave frequency from the wavelength and eB/m from B differ; "
                            f"the run uses omega_source={p['omega_source']!r}"),
                "omega_laser": omegas["laser"], "omega_cyclotron": omegas["cyclotron"],
                "ratio": omegas["laser"] / omegas["cyclotron"]})
        notes.append({
            "topic": "intensity",
            "message": ("cycle-averaged intensity implied by a0 read as a magnetic amplitude, "
                        "next to the quoted 1e21 W/cm^2; consistency is not asserted"),
            "intensity_from_a0_W_cm2": intensity_from_field(p["a0"]),
            "quoted_W_cm2": QUOTED_FIG2_INTENSITY,
            "a0_tilde": scaled.a0_tilde})
        if cfg.family == "redmond":
            sc = scn.circle_scenario(cfg.name, circle, scaled, si, notes)
        elif cfg.family == "volkov":
            sc = _quadrature_circle(cfg.name, circle, scaled, si, notes)
        else:
            sc = scn.bagrov_scenario(cfg.name, circle, p["a"])
            sc.scaled, sc.si, sc.notes = scaled, si, notes
        return sc, notes
    except DomainError as exc:
        kind = "superluminality" if "superluminal" in str(exc) else "domain"
        raise ConfigError(kind, str(exc), "parameters") from None


def _quadrature_circle(name, circle, scaled, si, notes) -> scn.Scenario:
    """The circle with generic quadrature shifts, but the closed-form gauge phase."""
    base = instances.redmond_circle(circle, closed_form=False)
    spec = volkov.VolkovFamilySpec(**{**base.__dict__,
                                      "Phi": lambda xi, x, y: instances.circle_phase(circle, xi, x, y)})
    sc = scn.circle_scenario(name, circle, scaled, si, notes)
    w = circle.omega

    def center(t):
        S = volkov.shifts(spec, w * t)
        return -float(primal(S[0])), -float(primal(S[1]))

    sc.spinor = volkov.volkov_field(spec)
    sc.column = lambda x: volkov.volkov_spinor(spec, x)
    sc.potential = lambda x: volkov.volkov_potential(spec, x)
    sc.fields = lambda x: volkov.volkov_fields(spec, x)
    sc.center = center
    sc.quadrature = True
    sc.params = (circle, spec)
    return sc


# -- artifacts ----------------------------------------------------------------------------

def fmt(v: float) -> str:
    return format(float(v), ".17g")


def _csv_bytes(header, rows) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue().encode()


def _density(sc: scn.Scenario, x) -> float:
    if sc.family == "planar":
        return planar.planar_density(sc.params.spec(), x)
    return volkov.volkov_density(sc.params[1], x)


def density_rows(sc: scn.Scenario, times: int, points: int) -> list:
    """Density on a window of +-3 widths around the packet centre, normalized per snapshot.

    Coordinates are SI (s, m); the density is per square metre.
    """
    k = CODATA_2018
    offsets = sc.offsets(points)
    cell = (offsets[1] - offsets[0]) ** 2
    rows = []
    for t in sc.times(times):
        cx, cy = sc.center(t)
        pts = [[float(t), cx + ox, cy + oy, 0.0] for ox in offsets for oy in offsets]
        d = np.array([_density(sc, x) for x in pts])
        d = d / (np.sum(d) * cell * k.length_unit ** 2)
        rows.extend([x[0] * k.time_unit, x[1] * k.length_unit, x[2] * k.length_unit,
                     x[3] * k.length_unit, v] for x, v in zip(pts, d))
    return rows


def field_rows(sc: scn.Scenario, times: int, points: int) -> list:
    """``eE`` and ``eB`` in critical-field units at SI coordinates."""
    k = CODATA_2018
    offsets = sc.offsets(points)
    rows = []
    for t in sc.times(times):
        cx, cy = sc.center(t)
        for ox in offsets:
            for oy in offsets:
                x = [float(t), cx + ox, cy + oy, 0.0]
                s = sc.fields(x)
                E = np.asarray(primal(s.E), float)
                B = np.asarray(primal(s.B), float)
                rows.append([x[0] * k.time_unit, x[1] * k.length_unit, x[2] * k.length_unit,
                             0.0, *E, *B])
    return rows


def _si_trajectory_rows(t, pos, vel, gam) -> list:
    k = CODATA_2018
    return [[ti * k.time_unit, *(np.asarray(r) * k.length_unit), *(np.asarray(v) * k.c), g]
            for ti, r, v, g in zip(t, pos, vel, gam)]


def center_trajectory(sc: scn.Scenario, steps: int, periods: float) -> list:
    """Packet-centre path with its velocity from exact derivatives."""
    ts = np.arange(steps + 1) * (periods * sc.span / steps)
    pos, vel = [], []
    for t in ts:
        cx, cy = sc.center(t)
        if sc.family == "planar":
            v = np.asarray(sc.params.velocity(t), float)
        else:
            spec = sc.params[1]
            w = spec.omega
            dS = volkov.shift_integrand(spec, w * t)
            v = -w * np.asarray(primal(dS), float)
        pos.append([cx, cy, 0.0])
        vel.append([v[0], v[1], 0.0])
    vel = np.array(vel)
    gam = 1.0 / np.sqrt(1.0 - np.einsum("ij,ij->i", vel, vel))
    return _si_trajectory_rows(ts, pos, vel, gam)


def classical_trajectories(sc: scn.Scenario, spec: TrajectorySpec) -> tuple[list, list]:
    """Boris-integrated point charges in the classical-limit ellipse fields."""
    p: ell.EllipseParams = sc.params

    def fields(t, r):
        s = ell.ellipse_limit_fields("classical", p, [t, r[0], r[1], r[2]])
        return np.asarray(s.E, float), np.asarray(s.B, float)

    out, trajs = [], []
    dt = spec.periods * p.period / spec.steps
    v0 = [float(c) for c in p.velocity(0.0)] + [0.0]
    for ox, oy in spec.offsets:
        start = [p.a1 + ox * sc.width, oy * sc.width, 0.0]
        tr = lorentz_push(start, v0, fields, dt, spec.steps)
        trajs.append(tr)
        out.append(_si_trajectory_rows(tr.t, tr.position, tr.velocity, tr.gamma))
    return out, trajs


TRAJECTORY_HEADER = ["t", "x", "y", "z", "vx", "vy", "vz", "gamma"]


def _write(out: Path, name: str, data: bytes, files: dict) -> None:
    (out / name).write_bytes(data)
    files[name] = {"sha256": hashlib.sha256(data).hexdigest(), "bytes": len(data)}


def _json_bytes(obj) -> bytes:
    return (json.dumps(obj, indent=2, sort_keys=True, default=_json_default) + "\n").encode()


def _json_default(o):
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"not serializable: {type(o).__name__}")


def run_scenario(cfg: ScenarioConfig, out: Path) -> tuple[ResidualReport, dict]:
    """Evaluate everything for ``cfg`` and write the bundle into ``out``."""
    sc, notes = build_scenario(cfg)
    try:
        report = scn.run_verification(sc, cfg.grid.shape, cfg.tolerances, cfg.grid.seed,
                                      cfg.grid.random_points)
    except ValueError as exc:
        raise ConfigError("tolerance", str(exc), "tolerances") from None
    density = _csv_bytes(["t", "x", "y", "z", "density"],
                         density_rows(sc, cfg.output.times, cfg.output.points))
    fields = _csv_bytes(["t", "x", "y", "z", "Ex", "Ey", "Ez", "Bx", "By", "Bz"],
                        field_rows(sc, cfg.output.times, cfg.output.points))
    center = _csv_bytes(TRAJECTORY_HEADER,
                        center_trajectory(sc, cfg.output.path_samples, cfg.trajectory.periods))
    extra = {}
    larmor = None
    if sc.family == "planar":
        rows, trajs = classical_trajectories(sc, cfg.trajectory)
        extra = {f"trajectory_classical_{i}.csv": _csv_bytes(TRAJECTORY_HEADER, r)
                 for i, r in enumerate(rows)}
        if cfg.trajectory.periods >= 1.0:
            larmor = asdict(larmor_estimate(trajs[0], sc.params.period))
            larmor["ratio"] = larmor["radiated_scaled"] / larmor["kinetic_scaled"]

    files: dict = {}
    try:
        out.mkdir(parents=True, exist_ok=True)
        _write(out, "density.csv", density, files)
        _write(out, "fields.csv", fields, files)
        _write(out, "trajectory_center.csv", center, files)
        for name, data in extra.items():
            _write(out, name, data, files)
        _write(out, "report.json", _json_bytes(report.to_dict()), files)
        manifest = {
            "scenario": cfg.name,
            "family": cfg.family,
            "pass": report.passed,
            # the output directory is left out so bundles written elsewhere stay identical
            "config": asdict(cfg) | {"output": {k: v for k, v in asdict(cfg.output).items()
                                                if k != "dir"}},
            "constants": CODATA_2018.table(),
            "si": sc.si,
            "scaled": sc.scaled.to_dict() if sc.scaled else None,
            "units": {"coordinates": "SI (s, m)", "velocity": "m/s",
                      "density": "1/m^2, normalized per snapshot",
                      "fields": "eE, eB in units of the critical fields m^2 c^3/(e hbar), m^2 c^2/(e hbar)"},
            "larmor": larmor,
            "notes": notes,
            "files": files,
        }
        (out / "manifest.json").write_bytes(_json_bytes(manifest))
    except OSError as exc:
        raise OutputError(str(exc)) from None
    return report, manifest


class OutputError(Exception):
    pass


# -- entry point ----------------------------------------------------------------------------

def _print_json(obj, stream=None) -> None:
    (stream or sys.stdout).write(json.dumps(obj, indent=2, sort_keys=True, default=_json_default) + "\n")


def _resolve_out(flag: Optional[str], configured: Optional[str], default: str) -> Path:
    return Path(flag or os.environ.get(OUT_ENV) or configured or default)


def _cmd_run(args) -> int:
    cfg = load_config(args.config)
    if args.grid:
        cfg.grid.shape = parse_grid(args.grid)
    if args.seed is not None:
        cfg.grid.seed = args.seed
    cfg.tolerances.update(parse_tolerances(args.tol))
    out = _resolve_out(args.out, cfg.output.dir, os.path.join("out", cfg.name))
    report, _ = run_scenario(cfg, out)
    _print_json(report.to_dict())
    return EXIT_PASS if report.passed else EXIT_PHYSICS


def _cmd_verify(args) -> int:
    if args.scenario not in scn.SCENARIOS:
        raise ConfigError("unknown_scenario", f"unknown scenario {args.scenario!r}; "
                          f"known: {', '.join(sorted(scn.SCENARIOS))}")
    shape = parse_grid(args.grid) if args.grid else scn.DEFAULT_GRID
    try:
        report = scn.run_verification(args.scenario, shape, parse_tolerances(args.tol),
                                      args.seed or 0, args.random_points)
    except ValueError as exc:
        raise ConfigError("tolerance", str(exc)) from None
    data = report.to_dict()
    out = args.out or os.environ.get(OUT_ENV)
    if out:
        try:
            Path(out).mkdir(parents=True, exist_ok=True)
            (Path(out) / f"report_{args.scenario}.json").write_bytes(_json_bytes(data))
        except OSError as exc:
            raise OutputError(str(exc)) from None
    _print_json(data)
    return EXIT_PASS if report.passed else EXIT_PHYSICS


def _cmd_list(args) -> int:
    for name in sorted(scn.SCENARIOS):
        print(name)
    return EXIT_PASS


def _cmd_schema(args) -> int:
    _print_json(CONFIG_SCHEMA if args.which == "config" else REPORT_SCHEMA)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dirac-rdi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help=f"output directory (overrides ${OUT_ENV} and the config)")
        p.add_argument("--grid", help="verification grid NtxNxxNy, e.g. 7x7x7")
        p.add_argument("--tol", action="append", metavar="LAW=VALUE", help="tolerance override")
        p.add_argument("--seed", type=int, help="seed for random sample points")

    p = sub.add_parser("run", help="run a scenario config and write its artifacts")
    p.add_argument("config")
    common(p)
    p.set_defaults(fn=_cmd_run)

    p = sub.add_parser("verify", help="run the verification laws for a registered scenario")
    p.add_argument("scenario")
    common(p)
    p.add_argument("--random-points", type=int, default=0,
                   help="extra random points drawn with --seed")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("list-scenarios", help="print registered scenario names")
    p.set_defaults(fn=_cmd_list)

    p = sub.add_parser("schema", help="print the config or report JSON schema")
    p.add_argument("which", nargs="?", choices=["config", "report"], default="config")
    p.set_defaults(fn=_cmd_schema)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        _print_json(exc.to_dict())
        return EXIT_CONFIG
    except (ConfigurationError, DomainError) as exc:
        _print_json({"error": "domain", "message": str(exc), "path": None})
        return EXIT_CONFIG
    except OutputError as exc:
        _print_json({"error": "io", "message": str(exc), "path": None})
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
