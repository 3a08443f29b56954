"""Difficulty parameters for one game level."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields


class LevelValidationError(ValueError):
    """Invalid level configuration; .fields names every offending field."""

    def __init__(self, problems: list[str]):
        self.fields = problems
        super().__init__(f"invalid level config: {', '.join(problems)}")


@dataclass(frozen=True)
class LevelConfig:
    sensitivity: float = 0.25  # vertical speed, field-units/s
    x_spread: float = 0.1  # horizontal spawn jitter, [0, 1]
    y_spread: float = 0.8  # vertical spawn span, [0, 1]
    incoming_speed: float = 0.2  # leftward planet speed, field-units/s
    voice_maintenance_ms: float = 200.0  # continuous voicing before control engages
    session_duration_s: float = 60.0
    pitch_threshold_mel: float = 200.0  # up above, down at-or-below
    spawn_interval_s: float = 2.0
    planet_radius: float = 0.05
    ship_radius: float = 0.03
    rng_seed: int = 0

    def __post_init__(self):
        problems = []
        for name in ("sensitivity", "incoming_speed", "session_duration_s",
                     "pitch_threshold_mel", "spawn_interval_s",
                     "planet_radius", "ship_radius"):
            if getattr(self, name) <= 0:
                problems.append(name)
        for name in ("x_spread", "y_spread"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                problems.append(name)
        if self.voice_maintenance_ms < 0:
            problems.append("voice_maintenance_ms")
        if not isinstance(self.rng_seed, int):
            problems.append("rng_seed")
        if problems:
            raise LevelValidationError(problems)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "LevelConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(d) - known)
        if unknown:
            raise LevelValidationError(unknown)
        return cls(**d)
