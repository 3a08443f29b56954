"""Deterministic tick simulation of the voice-steered space-flight game.

The field is a unit square; the ship sits at x = 0.1 and only moves
vertically. Pitch above the level threshold steers up, pitch at or below
it steers down ("higher than" is strict), and control only engages after
the voicing streak satisfies the level's maintenance time. All state
transitions are pure functions, so identical inputs replay bit-identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .level import LevelConfig
from .rng import rng_seed_state, rng_uniform

SHIP_X = 0.1
MAX_TICK_DT = 0.1


class GameStatus(str, Enum):
    RUNNING = "running"
    GAME_OVER = "game_over"
    COMPLETED = "completed"


class StateMachineError(RuntimeError):
    """tick() called on a session that already ended."""


@dataclass(frozen=True)
class ControlSample:
    """Control-relevant slice of one analysis frame. Loudness is deliberately
    not represented: pitch is the only control factor."""

    voiced: bool
    pitch_mel: float | None = None

    def __post_init__(self):
        if self.voiced != (self.pitch_mel is not None):
            raise ValueError("voiced samples carry pitch_mel; unvoiced carry none")

    def to_dict(self) -> dict:
        return {"voiced": self.voiced, "pitch_mel": self.pitch_mel}

    @classmethod
    def from_dict(cls, d: dict) -> "ControlSample":
        return cls(voiced=d["voiced"], pitch_mel=d.get("pitch_mel"))


@dataclass(frozen=True)
class Planet:
    x: float
    y: float
    radius: float


@dataclass(frozen=True)
class GameState:
    tick: int
    time: float
    ship_y: float
    planets: tuple[Planet, ...]
    score: int
    status: GameStatus
    voiced_streak_ms: float
    rng_state: int
    planets_spawned: int


def new_session(level: LevelConfig) -> GameState:
    return GameState(
        tick=0,
        time=0.0,
        ship_y=0.5,
        planets=(),
        score=0,
        status=GameStatus.RUNNING,
        voiced_streak_ms=0.0,
        rng_state=rng_seed_state(level.rng_seed),
        planets_spawned=0,
    )


def control_velocity(
    sample: ControlSample, level: LevelConfig, voiced_streak_ms: float
) -> float:
    """Vertical velocity commanded by one control sample.

    Unvoiced input, or a voicing streak still shorter than the maintenance
    time, commands zero (the ship holds). Pitch equal to the threshold is
    "not higher", hence down.
    """
    if not sample.voiced or voiced_streak_ms < level.voice_maintenance_ms:
        return 0.0
    if sample.pitch_mel > level.pitch_threshold_mel:
        return level.sensitivity
    return -level.sensitivity


def tick(
    state: GameState, sample: ControlSample, dt: float, level: LevelConfig
) -> GameState:
    """Advance one timestep: streak, ship, planets, spawns, collision, end."""
    if state.status is not GameStatus.RUNNING:
        raise StateMachineError(f"cannot tick a session in status {state.status.value}")
    if not 0.0 < dt <= MAX_TICK_DT:
        raise ValueError(f"dt must lie in (0, {MAX_TICK_DT}], got {dt}")

    streak = state.voiced_streak_ms + dt * 1000.0 if sample.voiced else 0.0
    velocity = control_velocity(sample, level, streak)
    ship_y = min(1.0, max(0.0, state.ship_y + velocity * dt))

    moved = [
        Planet(p.x - level.incoming_speed * dt, p.y, p.radius) for p in state.planets
    ]
    survivors = [p for p in moved if p.x >= 0.0]
    score = state.score + (len(moved) - len(survivors))

    new_time = state.time + dt
    rng_state = state.rng_state
    spawned = state.planets_spawned
    k_first = math.floor(state.time / level.spawn_interval_s) + 1
    k_last = math.floor(new_time / level.spawn_interval_s)
    for _ in range(k_first, k_last + 1):
        jitter_x, rng_state = rng_uniform(rng_state, -level.x_spread, level.x_spread)
        jitter_y, rng_state = rng_uniform(
            rng_state, -level.y_spread / 2.0, level.y_spread / 2.0
        )
        survivors.append(Planet(1.0 + jitter_x, 0.5 + jitter_y, level.planet_radius))
        spawned += 1

    reach = level.ship_radius
    collided = any(
        math.hypot(p.x - SHIP_X, p.y - ship_y) < reach + p.radius for p in survivors
    )
    if collided:
        status = GameStatus.GAME_OVER
    elif new_time >= level.session_duration_s:
        status = GameStatus.COMPLETED
    else:
        status = GameStatus.RUNNING

    return GameState(
        tick=state.tick + 1,
        time=new_time,
        ship_y=ship_y,
        planets=tuple(survivors),
        score=score,
        status=status,
        voiced_streak_ms=streak,
        rng_state=rng_state,
        planets_spawned=spawned,
    )


@dataclass(frozen=True)
class TelemetryTick:
    """One tick's record: enough to render a replay and to re-simulate."""

    tick: int
    time: float
    dt: float
    sample: ControlSample
    ship_y: float
    score: int
    status: GameStatus
    planets: tuple[Planet, ...]
    planets_spawned: int

    def to_dict(self) -> dict:
        return {
            "tick": self.tick,
            "time": self.time,
            "dt": self.dt,
            "sample": self.sample.to_dict(),
            "ship_y": self.ship_y,
            "score": self.score,
            "status": self.status.value,
            "planets": [[p.x, p.y, p.radius] for p in self.planets],
            "planets_spawned": self.planets_spawned,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TelemetryTick":
        return cls(
            tick=d["tick"],
            time=d["time"],
            dt=d["dt"],
            sample=ControlSample.from_dict(d["sample"]),
            ship_y=d["ship_y"],
            score=d["score"],
            status=GameStatus(d["status"]),
            planets=tuple(Planet(*p) for p in d["planets"]),
            planets_spawned=d["planets_spawned"],
        )


def resimulate(
    level: LevelConfig, steps: Sequence[tuple[float, ControlSample]]
) -> tuple[GameState, list[TelemetryTick]]:
    """Fold tick over (dt, sample) steps, recording telemetry; stops when the
    session ends, ignoring any remaining steps."""
    state = new_session(level)
    telemetry: list[TelemetryTick] = []
    for dt, sample in steps:
        if state.status is not GameStatus.RUNNING:
            break
        state = tick(state, sample, dt, level)
        telemetry.append(
            TelemetryTick(
                tick=state.tick,
                time=state.time,
                dt=dt,
                sample=sample,
                ship_y=state.ship_y,
                score=state.score,
                status=state.status,
                planets=state.planets,
                planets_spawned=state.planets_spawned,
            )
        )
    return state, telemetry


def run_trace(
    level: LevelConfig, samples: Sequence[ControlSample], dt: float
) -> tuple[GameState, list[TelemetryTick]]:
    """Simulate a uniformly-timed control trace (one tick per sample)."""
    return resimulate(level, [(dt, s) for s in samples])
