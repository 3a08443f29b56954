"""Frame loudness in dB relative to digital full scale."""

from __future__ import annotations

import math

import numpy as np

from ..audio.types import AudioFrame

LOUDNESS_FLOOR_DB = -120.0


def loudness_db(frame: AudioFrame) -> float:
    """20*log10(RMS) of the frame, clamped to -120 dBFS for silence."""
    if frame.samples.size == 0:
        raise ValueError("frame must be nonempty")
    rms = math.sqrt(float(np.mean(frame.samples**2)))
    if rms <= 0.0:
        return LOUDNESS_FLOOR_DB
    return max(LOUDNESS_FLOOR_DB, 20.0 * math.log10(rms))
