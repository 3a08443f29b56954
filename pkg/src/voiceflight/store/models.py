"""Persisted clinical records: patients, therapy sessions, trends."""

from __future__ import annotations

from dataclasses import dataclass

from ..game.level import LevelConfig
from ..game.metrics import SessionMetrics

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Patient:
    id: str
    display_name: str
    created_at: str  # ISO-8601 UTC
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "display_name": self.display_name,
            "created_at": self.created_at,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Patient":
        return cls(**d)


@dataclass(frozen=True)
class TherapySession:
    """One game session (equals one therapy), frozen at save time."""

    id: str
    patient_id: str
    started_at: str  # ISO-8601 UTC
    level: LevelConfig
    metrics: SessionMetrics
    telemetry_path: str  # relative to the store root
    recording_path: str | None
    estimator_name: str
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "patient_id": self.patient_id,
            "started_at": self.started_at,
            "level": self.level.to_dict(),
            "metrics": self.metrics.to_dict(),
            "telemetry_path": self.telemetry_path,
            "recording_path": self.recording_path,
            "estimator_name": self.estimator_name,
            "schema_version": self.schema_version,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TherapySession":
        return cls(
            id=d["id"],
            patient_id=d["patient_id"],
            started_at=d["started_at"],
            level=LevelConfig.from_dict(d["level"]),
            metrics=SessionMetrics.from_dict(d["metrics"]),
            telemetry_path=d["telemetry_path"],
            recording_path=d["recording_path"],
            estimator_name=d["estimator_name"],
            schema_version=d["schema_version"],
        )


@dataclass(frozen=True)
class TrendPoint:
    session_index: int
    started_at: str
    value: float

    def to_dict(self) -> dict:
        return {
            "session_index": self.session_index,
            "started_at": self.started_at,
            "value": self.value,
        }


@dataclass(frozen=True)
class TrendSeries:
    """A metric over a patient's sessions with its least-squares slope."""

    metric_name: str
    points: tuple[TrendPoint, ...]
    slope: float | None  # metric units per session; None when n < 2
    n: int

    def to_dict(self) -> dict:
        return {
            "metric_name": self.metric_name,
            "points": [p.to_dict() for p in self.points],
            "slope": self.slope,
            "n": self.n,
        }
