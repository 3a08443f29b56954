"""Tunable parameters shared by the pitch estimators and voicing logic."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EstimatorConfig:
    f_min: float = 60.0
    f_max: float = 1000.0
    yin_threshold: float = 0.15
    fft_zero_pad_factor: int = 4
    loudness_gate_db: float = -45.0
    median_window: int = 5

    def __post_init__(self):
        if not 0 < self.f_min < self.f_max:
            raise ValueError("need 0 < f_min < f_max")
        if not 0.0 < self.yin_threshold < 1.0:
            raise ValueError("yin_threshold must lie in (0, 1)")
        if self.fft_zero_pad_factor < 1:
            raise ValueError("fft_zero_pad_factor must be >= 1")
        if self.median_window < 1 or self.median_window % 2 == 0:
            raise ValueError("median_window must be a positive odd count")

    def check_rate(self, sample_rate: int) -> None:
        if self.f_max >= sample_rate / 2:
            raise ValueError(
                f"f_max {self.f_max} must be below Nyquist ({sample_rate / 2})"
            )
