"""Core audio value types: clips, analysis frames, synthetic tone specs."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SUPPORTED_SAMPLE_RATES = (16000, 44100, 48000)

F0_FLOOR_HZ = 30.0
F0_CEIL_HZ = 2000.0


def _as_readonly_f64(samples) -> np.ndarray:
    arr = np.asarray(samples, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("samples must be one-dimensional (mono)")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class AudioClip:
    """A whole mono recording, normalized to [-1, +1]."""

    samples: np.ndarray
    sample_rate: int
    source_label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "samples", _as_readonly_f64(self.samples))
        if self.sample_rate not in SUPPORTED_SAMPLE_RATES:
            raise ValueError(
                f"sample_rate must be one of {SUPPORTED_SAMPLE_RATES}, got {self.sample_rate}"
            )
        if self.samples.size and (
            np.min(self.samples) < -1.0 or np.max(self.samples) > 1.0
        ):
            raise ValueError("samples must lie within [-1, +1]")

    @property
    def duration_s(self) -> float:
        return self.samples.size / self.sample_rate

    def __eq__(self, other) -> bool:
        if not isinstance(other, AudioClip):
            return NotImplemented
        return (
            self.sample_rate == other.sample_rate
            and self.source_label == other.source_label
            and np.array_equal(self.samples, other.samples)
        )


@dataclass(frozen=True)
class AudioFrame:
    """One fixed-length analysis window cut from a stream or clip."""

    samples: np.ndarray
    sample_rate: int
    start_time: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "samples", _as_readonly_f64(self.samples))
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")
        if self.start_time < 0:
            raise ValueError("start_time must be non-negative")

    @property
    def start_sample(self) -> int:
        return int(round(self.start_time * self.sample_rate))

    @property
    def duration_s(self) -> float:
        return self.samples.size / self.sample_rate

    def __eq__(self, other) -> bool:
        if not isinstance(other, AudioFrame):
            return NotImplemented
        return (
            self.sample_rate == other.sample_rate
            and self.start_time == other.start_time
            and np.array_equal(self.samples, other.samples)
        )


@dataclass(frozen=True)
class ToneSpec:
    """Recipe for a synthetic harmonic tone with known ground truth.

    The f0 trajectory is piecewise linear over (time, hz) breakpoints; a
    bare float means a constant tone over the full duration. noise_seed
    makes the added noise reproducible so generated corpora are
    byte-identical for a given seed.
    """

    f0_trajectory: tuple[tuple[float, float], ...]
    amplitude: float
    duration: float
    snr_db: float = math.inf
    harmonics: int = 1
    noise_seed: int = 0

    def __post_init__(self):
        traj = self.f0_trajectory
        if isinstance(traj, (int, float)):
            traj = ((0.0, float(traj)), (self.duration, float(traj)))
        traj = tuple((float(t), float(f)) for t, f in traj)
        object.__setattr__(self, "f0_trajectory", traj)
        if self.duration <= 0:
            raise ValueError("duration must be positive")
        if not 0.0 <= self.amplitude <= 1.0:
            raise ValueError("amplitude must lie in [0, 1]")
        if self.harmonics < 1:
            raise ValueError("harmonics must be >= 1")
        if len(traj) < 2:
            raise ValueError("f0_trajectory needs at least two breakpoints")
        times = [t for t, _ in traj]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("trajectory breakpoint times must be strictly increasing")
        for _, f in traj:
            if not F0_FLOOR_HZ <= f <= F0_CEIL_HZ:
                raise ValueError(
                    f"f0 must stay within [{F0_FLOOR_HZ}, {F0_CEIL_HZ}] Hz, got {f}"
                )

    def f0_at(self, t) -> np.ndarray:
        """Instantaneous f0 at time(s) t, clamped to the trajectory ends."""
        times = np.array([p[0] for p in self.f0_trajectory])
        freqs = np.array([p[1] for p in self.f0_trajectory])
        return np.interp(np.asarray(t, dtype=np.float64), times, freqs)
