"""Residual reports: one record per verified law, grouped per scenario."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np


@dataclass(frozen=True)
class LawResult:
    law: str
    max_residual: float
    mean_residual: float
    points: int
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.max_residual < self.tolerance)

    @classmethod
    def from_samples(cls, law: str, samples: Iterable[float], tolerance: float) -> "LawResult":
        arr = np.asarray(list(samples), dtype=float)
        if arr.size == 0:
            raise ValueError(f"no samples for law {law!r}")
        # NaN must never count as a pass
        worst = float(np.max(arr)) if np.all(np.isfinite(arr)) else float("inf")
        return cls(law, worst, float(np.mean(arr)), int(arr.size), float(tolerance))

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "max_residual": self.max_residual,
            "mean_residual": self.mean_residual,
            "points": self.points,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass
class ResidualReport:
    scenario: str
    laws: list[LawResult] = field(default_factory=list)

    def add(self, result: LawResult) -> None:
        self.laws.append(result)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.laws)

    def __getitem__(self, law: str) -> LawResult:
        for r in self.laws:
            if r.law == law:
                return r
        raise KeyError(law)

    def to_dict(self) -> dict:
        return {"scenario": self.scenario, "pass": self.passed,
                "laws": [r.to_dict() for r in self.laws]}

    def to_json(self) -> str:
        # repr of a float round-trips exactly, so the JSON is reproducible
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "ResidualReport":
        laws = [LawResult(d["law"], d["max_residual"], d["mean_residual"], d["points"],
                          d["tolerance"]) for d in data["laws"]]
        return cls(data["scenario"], laws)


REPORT_SCHEMA = {
    "type": "object",
    "required": ["scenario", "pass", "laws"],
    "properties": {
        "scenario": {"type": "string"},
        "pass": {"type": "boolean"},
        "laws": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["law", "max_residual", "mean_residual", "points", "tolerance", "pass"],
                "properties": {
                    "law": {"type": "string"},
                    "max_residual": {"type": "number"},
                    "mean_residual": {"type": "number"},
                    "points": {"type": "integer", "minimum": 1},
                    "tolerance": {"type": "number"},
                    "pass": {"type": "boolean"},
                },
            },
        },
    },
}
