import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from voiceflight.audio import AudioClip, StreamFramer, default_window_hop, frame_stream


def clip_of(n: int, rate: int = 44100) -> AudioClip:
    return AudioClip(np.linspace(-0.9, 0.9, n), rate)


def test_windowing_arithmetic():
    frames = frame_stream(clip_of(1000), window=400, hop=200)
    assert len(frames) == 4
    starts = [f.start_sample for f in frames]
    assert starts == [0, 200, 400, 600]
    assert all(f.samples.size == 400 for f in frames)


def test_hop_equal_window_tiles():
    frames = frame_stream(clip_of(1200), window=400, hop=400)
    assert [f.start_sample for f in frames] == [0, 400, 800]
    stitched = np.concatenate([f.samples for f in frames])
    assert np.array_equal(stitched, clip_of(1200).samples)


def test_short_clip_yields_empty():
    assert frame_stream(clip_of(100), window=400, hop=200) == []


def test_start_times_follow_hop():
    frames = frame_stream(clip_of(3000), window=1024, hop=256)
    for k, f in enumerate(frames):
        assert f.start_time == k * 256 / 44100


def test_invalid_window_and_hop():
    with pytest.raises(ValueError):
        frame_stream(clip_of(1000), window=32, hop=16)
    with pytest.raises(ValueError):
        frame_stream(clip_of(1000), window=400, hop=0)
    with pytest.raises(ValueError):
        frame_stream(clip_of(1000), window=400, hop=401)


def test_default_window_hop_scales_with_rate():
    assert default_window_hop(44100) == (2048, 512)
    w16, h16 = default_window_hop(16000)
    assert abs(w16 / 16000 - 2048 / 44100) < 1 / 16000
    assert abs(h16 / 16000 - 512 / 44100) < 1 / 16000


@settings(max_examples=50, deadline=None)
@given(
    n=st.integers(min_value=0, max_value=5000),
    window=st.integers(min_value=64, max_value=1024),
    hop_frac=st.floats(min_value=0.05, max_value=1.0),
)
def test_frame_count_formula(n, window, hop_frac):
    hop = max(1, int(window * hop_frac))
    frames = frame_stream(clip_of(max(n, 1)), window=window, hop=hop)
    n_eff = max(n, 1)
    expected = (n_eff - window) // hop + 1 if n_eff >= window else 0
    assert len(frames) == expected


def test_stream_framer_matches_frame_stream():
    clip = clip_of(10000)
    expected = frame_stream(clip, window=2048, hop=512)
    framer = StreamFramer(44100, window=2048, hop=512)
    got = []
    rng = np.random.default_rng(3)
    i = 0
    while i < clip.samples.size:
        step = int(rng.integers(1, 700))
        got.extend(framer.push(clip.samples[i : i + step]))
        i += step
    assert len(got) == len(expected)
    for a, b in zip(got, expected):
        assert a == b
