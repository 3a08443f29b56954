from .engine import (
    MAX_TICK_DT,
    SHIP_X,
    ControlSample,
    GameState,
    GameStatus,
    Planet,
    StateMachineError,
    TelemetryTick,
    control_velocity,
    new_session,
    resimulate,
    run_trace,
    tick,
)
from .level import LevelConfig, LevelValidationError
from .metrics import CLINICAL_FACTORS, METRIC_FIELDS, SessionMetrics, session_metrics

__all__ = [
    "LevelConfig",
    "LevelValidationError",
    "ControlSample",
    "GameState",
    "GameStatus",
    "Planet",
    "TelemetryTick",
    "StateMachineError",
    "SessionMetrics",
    "session_metrics",
    "new_session",
    "control_velocity",
    "tick",
    "run_trace",
    "resimulate",
    "SHIP_X",
    "MAX_TICK_DT",
    "METRIC_FIELDS",
    "CLINICAL_FACTORS",
]
