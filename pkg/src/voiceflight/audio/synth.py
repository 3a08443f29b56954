"""Ground-truth tone generator used as the oracle for estimator tests."""

from __future__ import annotations

import math

import numpy as np

from .types import AudioClip, ToneSpec


def synth_tone(spec: ToneSpec, sample_rate: int) -> AudioClip:
    """Render a phase-continuous harmonic tone following spec.f0_trajectory.

    Harmonic k gets amplitude 1/k; the stack is scaled so its peak equals
    spec.amplitude. White noise is added to meet spec.snr_db, then samples
    are clipped to [-1, +1].
    """
    n = int(round(spec.duration * sample_rate))
    t = np.arange(n) / sample_rate
    f_inst = spec.f0_at(t)

    # phase[i] = 2*pi * integral of f up to sample i (rectangle rule)
    dphi = 2.0 * math.pi * f_inst / sample_rate
    phase = np.concatenate([[0.0], np.cumsum(dphi[:-1])])

    signal = np.zeros(n)
    for k in range(1, spec.harmonics + 1):
        signal += np.sin(k * phase) / k

    if spec.amplitude == 0.0:
        signal = np.zeros(n)
    else:
        peak = np.max(np.abs(signal))
        if peak > 0:
            signal *= spec.amplitude / peak

    if math.isfinite(spec.snr_db) and spec.amplitude > 0.0:
        rms = math.sqrt(float(np.mean(signal**2)))
        noise_rms = rms / 10.0 ** (spec.snr_db / 20.0)
        rng = np.random.default_rng(np.random.SeedSequence(spec.noise_seed))
        signal = signal + rng.normal(0.0, noise_rms, n)

    return AudioClip(
        samples=np.clip(signal, -1.0, 1.0),
        sample_rate=sample_rate,
        source_label="synth",
    )
