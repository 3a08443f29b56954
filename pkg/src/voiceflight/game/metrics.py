"""Clinical factors derived from one session's telemetry."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .engine import TelemetryTick
from .level import LevelConfig


@dataclass(frozen=True)
class SessionMetrics:
    phonation_time_ms: int
    pitch_change_mel: float
    duration_s: float
    reaction_time_ms: int | None
    score: int
    mean_pitch_mel: float | None

    def __post_init__(self):
        if self.phonation_time_ms > round(self.duration_s * 1000) :
            raise ValueError("phonation time cannot exceed session duration")
        if self.pitch_change_mel < 0:
            raise ValueError("pitch_change_mel must be non-negative")

    def to_dict(self) -> dict:
        return {
            "phonation_time_ms": self.phonation_time_ms,
            "pitch_change_mel": self.pitch_change_mel,
            "duration_s": self.duration_s,
            "reaction_time_ms": self.reaction_time_ms,
            "score": self.score,
            "mean_pitch_mel": self.mean_pitch_mel,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SessionMetrics":
        return cls(**d)


def session_metrics(
    telemetry: Sequence[TelemetryTick], level: LevelConfig
) -> SessionMetrics:
    """Phonation time, pitch range, duration, reaction time, mean pitch, score.

    Times are quantized (ms for the clinical factors, ns for the duration)
    so that float accumulation noise over thousands of ticks cannot leak
    into values that are exact by construction.
    """
    if not telemetry:
        raise ValueError("telemetry must be nonempty")

    duration_s = round(telemetry[-1].time, 9)
    voiced = [t for t in telemetry if t.sample.voiced]

    phonation_ms = round(sum(t.dt for t in voiced) * 1000.0)
    phonation_ms = min(phonation_ms, round(duration_s * 1000))

    reaction_ms: int | None = None
    if voiced:
        first = voiced[0]
        reaction_ms = round((first.time - first.dt) * 1000.0)

    pitches = [t.sample.pitch_mel for t in voiced]
    pitch_change = max(pitches) - min(pitches) if len(pitches) >= 2 else 0.0
    mean_pitch = sum(pitches) / len(pitches) if pitches else None

    return SessionMetrics(
        phonation_time_ms=phonation_ms,
        pitch_change_mel=pitch_change,
        duration_s=duration_s,
        reaction_time_ms=reaction_ms,
        score=telemetry[-1].score,
        mean_pitch_mel=mean_pitch,
    )


METRIC_FIELDS = (
    "phonation_time_ms",
    "pitch_change_mel",
    "duration_s",
    "reaction_time_ms",
    "score",
    "mean_pitch_mel",
)

CLINICAL_FACTORS = (
    "phonation_time_ms",
    "pitch_change_mel",
    "duration_s",
    "reaction_time_ms",
)
