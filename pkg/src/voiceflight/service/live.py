"""Server-side live pipeline: wire audio in, analysis + game telemetry out.

The same analyze() that the offline CLI uses runs here, on frames cut by
the same framing rules, so streaming and offline analysis of identical
audio produce identical PitchFrame sequences.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from ..analysis.config import EstimatorConfig
from ..analysis.pipeline import PitchFrame, analyze
from ..audio.framing import StreamFramer, default_window_hop
from ..audio.types import SUPPORTED_SAMPLE_RATES, AudioClip
from ..game.engine import (
    ControlSample,
    GameState,
    GameStatus,
    TelemetryTick,
    new_session,
    tick,
)
from ..game.level import LevelConfig
from ..game.metrics import SessionMetrics, session_metrics
from .wire import WireAudioFrame, WireProtocolError


def state_summary(state: GameState) -> dict:
    return {
        "tick": state.tick,
        "time": state.time,
        "ship_y": state.ship_y,
        "score": state.score,
        "status": state.status.value,
        "planets": [[p.x, p.y, p.radius] for p in state.planets],
        "planets_spawned": state.planets_spawned,
        "voiced_streak_ms": state.voiced_streak_ms,
    }


@dataclass
class LivePipeline:
    """Owns one live session: framing, analysis, game state, telemetry."""

    level: LevelConfig
    cfg: EstimatorConfig
    estimator: str

    state: GameState = field(init=False)
    telemetry: list[TelemetryTick] = field(init=False, default_factory=list)
    pitch_frames: list[PitchFrame] = field(init=False, default_factory=list)
    _framer: StreamFramer | None = field(init=False, default=None)
    _chunks: list[np.ndarray] = field(init=False, default_factory=list)
    _dt: float = field(init=False, default=0.0)
    _busy_s: float = field(init=False, default=0.0)

    def __post_init__(self):
        self.state = new_session(self.level)

    @property
    def sample_rate(self) -> int | None:
        return self._framer.sample_rate if self._framer else None

    @property
    def done(self) -> bool:
        return self.state.status is not GameStatus.RUNNING

    def feed(self, wire: WireAudioFrame) -> list[dict]:
        """Consume one wire frame; return telemetry messages in tick order."""
        if self.done:
            return []
        t0 = time.perf_counter()
        if self._framer is None:
            if wire.sample_rate not in SUPPORTED_SAMPLE_RATES:
                raise WireProtocolError(
                    f"unsupported sample rate {wire.sample_rate}; "
                    f"expected one of {SUPPORTED_SAMPLE_RATES}"
                )
            window, hop = default_window_hop(wire.sample_rate)
            self._framer = StreamFramer(wire.sample_rate, window, hop)
            self._dt = hop / wire.sample_rate
        elif wire.sample_rate != self._framer.sample_rate:
            raise WireProtocolError(
                f"sample rate changed mid-stream: {self._framer.sample_rate} "
                f"-> {wire.sample_rate}"
            )

        samples = np.clip(wire.samples.astype(np.float64), -1.0, 1.0)
        self._chunks.append(samples)

        messages: list[dict] = []
        for frame in self._framer.push(samples):
            pf = analyze(frame, self.cfg, self.estimator)
            self.pitch_frames.append(pf)
            messages.append({"kind": "pitch", "payload": pf.to_dict()})

            sample = ControlSample(voiced=pf.voiced, pitch_mel=pf.pitch_mel)
            self.state = tick(self.state, sample, self._dt, self.level)
            self.telemetry.append(
                TelemetryTick(
                    tick=self.state.tick,
                    time=self.state.time,
                    dt=self._dt,
                    sample=sample,
                    ship_y=self.state.ship_y,
                    score=self.state.score,
                    status=self.state.status,
                    planets=self.state.planets,
                    planets_spawned=self.state.planets_spawned,
                )
            )
            messages.append({"kind": "state", "payload": state_summary(self.state)})
            if self.done:
                break
        self._busy_s += time.perf_counter() - t0
        return messages

    def finish(self) -> tuple[SessionMetrics, AudioClip | None, dict]:
        """Metrics, the accumulated recording, and pipeline timing stats."""
        metrics = session_metrics(self.telemetry, self.level)
        recording = None
        if self._chunks and self._framer is not None:
            recording = AudioClip(
                np.concatenate(self._chunks),
                self._framer.sample_rate,
                source_label="live",
            )
        stats = {
            "frames_analyzed": len(self.pitch_frames),
            "pipeline_ms_per_frame": (
                1000.0 * self._busy_s / len(self.pitch_frames)
                if self.pitch_frames
                else 0.0
            ),
        }
        return metrics, recording, stats
