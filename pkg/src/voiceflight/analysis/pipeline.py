"""Per-frame composite analysis: the record shown on the live monitor."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ..audio.types import AudioFrame
from .config import EstimatorConfig
from .estimators import ESTIMATORS, PitchEstimator, get_estimator
from .loudness import loudness_db
from .scales import hz_to_mel, hz_to_midi


@dataclass(frozen=True)
class PitchFrame:
    """One analysis result: frequency, mel pitch, MIDI note, loudness, voicing.

    All pitch-derived fields are present exactly when the frame is voiced.
    """

    time: float
    f0_hz: float | None
    pitch_mel: float | None
    midi_note_number: int | None
    midi_note_name: str | None
    cents_offset: float | None
    loudness_db: float
    voiced: bool
    confidence: float
    sample_index: int
    frame_duration: float

    def __post_init__(self):
        pitch_fields = (
            self.f0_hz,
            self.pitch_mel,
            self.midi_note_number,
            self.midi_note_name,
            self.cents_offset,
        )
        if self.voiced and any(v is None for v in pitch_fields):
            raise ValueError("voiced frame must carry all pitch fields")
        if not self.voiced and any(v is not None for v in pitch_fields):
            raise ValueError("unvoiced frame must carry no pitch fields")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError("confidence must lie in [0, 1]")

    def to_dict(self) -> dict:
        return {
            "time": self.time,
            "f0_hz": self.f0_hz,
            "pitch_mel": self.pitch_mel,
            "midi_note_number": self.midi_note_number,
            "midi_note_name": self.midi_note_name,
            "cents_offset": self.cents_offset,
            "loudness_db": self.loudness_db,
            "voiced": self.voiced,
            "confidence": self.confidence,
            "sample_index": self.sample_index,
            "frame_duration": self.frame_duration,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PitchFrame":
        return cls(**d)


def analyze(
    frame: AudioFrame,
    cfg: EstimatorConfig,
    estimator: str | PitchEstimator = "yin",
) -> PitchFrame:
    """Run one estimator plus loudness on a frame and assemble a PitchFrame.

    A frame counts as voiced only when the estimator found a pitch AND the
    frame is louder than cfg.loudness_gate_db; the gate rejects breath
    noise that still has spurious periodicity.
    """
    fn = get_estimator(estimator) if isinstance(estimator, str) else estimator
    f0, confidence = fn(frame, cfg)
    level = loudness_db(frame)
    voiced = f0 is not None and level > cfg.loudness_gate_db

    if voiced:
        mel = hz_to_mel(f0)
        number, name, cents = hz_to_midi(f0)
    else:
        f0 = mel = cents = None
        number = name = None

    return PitchFrame(
        time=frame.start_time,
        f0_hz=f0,
        pitch_mel=mel,
        midi_note_number=number,
        midi_note_name=name,
        cents_offset=cents,
        loudness_db=level,
        voiced=voiced,
        confidence=confidence,
        sample_index=frame.start_sample,
        frame_duration=frame.duration_s,
    )


def analyze_all(
    frames,
    cfg: EstimatorConfig,
    estimator: str | PitchEstimator = "yin",
) -> list[PitchFrame]:
    fn = get_estimator(estimator) if isinstance(estimator, str) else estimator
    return [analyze(f, cfg, fn) for f in frames]


def smooth(track: list[PitchFrame], cfg: EstimatorConfig) -> list[PitchFrame]:
    """Median-filter f0 over voiced frames; unvoiced frames pass through.

    Each voiced frame's f0 becomes the median of the voiced f0s inside its
    centered median_window (truncated at the track ends); mel and MIDI
    fields are recomputed from the smoothed f0 with the same conversions
    analyze uses.
    """
    half = cfg.median_window // 2
    out: list[PitchFrame] = []
    for i, pf in enumerate(track):
        if not pf.voiced:
            out.append(pf)
            continue
        lo = max(0, i - half)
        hi = min(len(track), i + half + 1)
        voiced_f0 = [p.f0_hz for p in track[lo:hi] if p.voiced]
        f0 = float(np.median(voiced_f0))
        if f0 == pf.f0_hz:
            out.append(pf)
            continue
        number, name, cents = hz_to_midi(f0)
        out.append(
            replace(
                pf,
                f0_hz=f0,
                pitch_mel=hz_to_mel(f0),
                midi_note_number=number,
                midi_note_name=name,
                cents_offset=cents,
            )
        )
    return out


__all__ = [
    "PitchFrame",
    "analyze",
    "analyze_all",
    "smooth",
    "ESTIMATORS",
]
