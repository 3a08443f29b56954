"""Cutting clips and live streams into fixed-size analysis windows."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .types import AudioClip, AudioFrame

# ~46 ms window / ~11.6 ms hop at 44.1 kHz, scaled proportionally elsewhere.
BASE_WINDOW = 2048
BASE_HOP = 512
BASE_RATE = 44100

MIN_WINDOW = 64


def default_window_hop(sample_rate: int) -> tuple[int, int]:
    """Window and hop sizes (samples) giving the same durations at any rate."""
    window = max(MIN_WINDOW, round(BASE_WINDOW * sample_rate / BASE_RATE))
    hop = max(1, round(BASE_HOP * sample_rate / BASE_RATE))
    return window, hop


def frame_stream(clip: AudioClip, window: int, hop: int) -> list[AudioFrame]:
    """Split a clip into frames at k*hop; a trailing partial window is dropped."""
    _check_window_hop(window, hop)
    n = clip.samples.size
    if n < window:
        return []
    frames = []
    for k in range((n - window) // hop + 1):
        start = k * hop
        frames.append(
            AudioFrame(
                samples=clip.samples[start : start + window],
                sample_rate=clip.sample_rate,
                start_time=start / clip.sample_rate,
            )
        )
    return frames


class StreamFramer:
    """Incremental framer for live capture; emits the same frames that
    frame_stream would produce on the concatenated input."""

    def __init__(self, sample_rate: int, window: int | None = None, hop: int | None = None):
        if window is None or hop is None:
            dw, dh = default_window_hop(sample_rate)
            window = window if window is not None else dw
            hop = hop if hop is not None else dh
        _check_window_hop(window, hop)
        self.sample_rate = sample_rate
        self.window = window
        self.hop = hop
        self._buf = np.empty(0, dtype=np.float64)
        self._buf_start = 0  # absolute index of _buf[0]
        self._next_frame = 0

    def push(self, samples: np.ndarray) -> Iterator[AudioFrame]:
        """Feed new samples; yield every frame that became complete."""
        self._buf = np.concatenate([self._buf, np.asarray(samples, dtype=np.float64)])
        while True:
            start = self._next_frame * self.hop
            offset = start - self._buf_start
            if offset + self.window > self._buf.size:
                break
            yield AudioFrame(
                samples=self._buf[offset : offset + self.window].copy(),
                sample_rate=self.sample_rate,
                start_time=start / self.sample_rate,
            )
            self._next_frame += 1
            # drop samples no future frame can need
            keep_from = self._next_frame * self.hop
            drop = keep_from - self._buf_start
            if drop > 0:
                self._buf = self._buf[drop:]
                self._buf_start = keep_from


def _check_window_hop(window: int, hop: int) -> None:
    if window < MIN_WINDOW:
        raise ValueError(f"window must be >= {MIN_WINDOW}, got {window}")
    if not 0 < hop <= window:
        raise ValueError(f"hop must be in (0, window], got {hop}")
