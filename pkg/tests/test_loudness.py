import numpy as np
import pytest

from voiceflight.analysis import LOUDNESS_FLOOR_DB, loudness_db
from voiceflight.audio import AudioFrame, frame_stream

from ._support import make_tone


def test_full_scale_sine():
    clip = make_tone(440.0, amplitude=1.0)
    frame = frame_stream(clip, 2048, 512)[10]
    assert loudness_db(frame) == pytest.approx(-3.01, abs=0.05)


def test_silence_clamps_to_floor():
    frame = AudioFrame(samples=np.zeros(2048), sample_rate=44100)
    assert loudness_db(frame) == LOUDNESS_FLOOR_DB == -120.0


def test_dc_half_scale():
    frame = AudioFrame(samples=np.full(2048, 0.5), sample_rate=44100)
    assert loudness_db(frame) == pytest.approx(-6.02, abs=0.01)


def test_empty_frame_rejected():
    frame = AudioFrame(samples=np.zeros(0), sample_rate=44100)
    with pytest.raises(ValueError):
        loudness_db(frame)


def test_in_range_signal_bounded():
    rng = np.random.default_rng(0)
    for _ in range(20):
        frame = AudioFrame(
            samples=np.clip(rng.normal(0, 0.4, 1024), -1, 1), sample_rate=44100
        )
        assert -120.0 <= loudness_db(frame) <= 0.0
