"""Fundamental-frequency estimators: FFT peak, autocorrelation, YIN.

All three share the same contract: given one analysis frame they return
(f0_hz, confidence), with f0_hz None when the frame is judged unpitched.
Peak/minimum positions are refined by parabolic interpolation so accuracy
is not limited to bin or lag granularity.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from ..audio.types import AudioFrame
from .config import EstimatorConfig

Estimate = tuple[float | None, float]
PitchEstimator = Callable[[AudioFrame, EstimatorConfig], Estimate]

ACF_MIN_CONFIDENCE = 0.3
ACF_PEAK_TOLERANCE = 0.9  # accept the earliest local max within 90% of the best


def _parabolic_delta(ym1: float, y0: float, yp1: float) -> float:
    denom = ym1 - 2.0 * y0 + yp1
    if denom == 0.0:
        return 0.0
    delta = 0.5 * (ym1 - yp1) / denom
    return float(np.clip(delta, -0.5, 0.5))


def estimate_fft_peak(frame: AudioFrame, cfg: EstimatorConfig) -> Estimate:
    """Strongest in-band peak of the Hann-windowed, zero-padded spectrum.

    Confidence is the peak bin's share of the total in-band magnitude, so
    it is high for clean tones and low for broadband noise.
    """
    cfg.check_rate(frame.sample_rate)
    x = frame.samples
    n = x.size
    if n < 64:
        raise ValueError("frame too short for spectral analysis")
    if not np.any(x):
        return None, 0.0

    nfft = n * cfg.fft_zero_pad_factor
    mag = np.abs(np.fft.rfft(x * np.hanning(n), nfft))
    freqs = np.fft.rfftfreq(nfft, 1.0 / frame.sample_rate)

    band = np.flatnonzero((freqs >= cfg.f_min) & (freqs <= cfg.f_max))
    if band.size == 0:
        return None, 0.0
    total = float(np.sum(mag[band]))
    if total <= 0.0:
        return None, 0.0

    k = int(band[np.argmax(mag[band])])
    logm = np.log(np.maximum(mag, 1e-30))
    delta = 0.0
    if 0 < k < mag.size - 1:
        delta = _parabolic_delta(logm[k - 1], logm[k], logm[k + 1])
    f0 = (k + delta) * frame.sample_rate / nfft
    f0 = float(np.clip(f0, cfg.f_min, cfg.f_max))
    confidence = float(mag[k] / total)
    return f0, confidence


def estimate_acf(frame: AudioFrame, cfg: EstimatorConfig) -> Estimate:
    """Normalized autocorrelation peak within the configured lag range.

    The correlation is normalized by the energies of both windows so a
    perfectly periodic frame scores ~1 at its period regardless of lag.
    Among local maxima within ACF_PEAK_TOLERANCE of the best, the smallest
    lag wins; this prevents period-doubling on steady tones where the
    autocorrelation is near-equal at every multiple of the true period.
    """
    cfg.check_rate(frame.sample_rate)
    x = frame.samples
    n = x.size
    if n < 64:
        raise ValueError("frame too short for autocorrelation")
    if np.ptp(x) == 0.0:
        return None, 0.0

    # floor, not ceil: f_max may sit between integer lags and the refined
    # estimate is clamped back into band afterwards
    lag_min = max(2, int(math.floor(frame.sample_rate / cfg.f_max)))
    lag_hi = min(int(math.floor(frame.sample_rate / cfg.f_min)), n // 2)
    if lag_min >= lag_hi:
        return None, 0.0

    nfft = 1 << (2 * n).bit_length()
    r = np.fft.irfft(np.abs(np.fft.rfft(x, nfft)) ** 2)[: lag_hi + 2]
    cums = np.concatenate([[0.0], np.cumsum(x * x)])
    taus = np.arange(lag_hi + 2)
    e_head = cums[n - taus]
    e_tail = cums[n] - cums[taus]
    norm = np.sqrt(e_head * e_tail)
    nccf = np.divide(r, norm, out=np.zeros_like(r), where=norm > 0)

    seg = nccf[lag_min : lag_hi + 1]
    vmax = float(np.max(seg))
    interior = np.arange(lag_min, lag_hi + 1)
    is_peak = (nccf[interior] > nccf[interior - 1]) & (
        nccf[interior] >= nccf[interior + 1]
    )
    peaks = interior[is_peak]
    if peaks.size == 0:
        return None, max(0.0, min(vmax, 1.0))

    good = peaks[nccf[peaks] >= ACF_PEAK_TOLERANCE * vmax]
    tau = int(good[0]) if good.size else int(peaks[np.argmax(nccf[peaks])])

    delta = _parabolic_delta(nccf[tau - 1], nccf[tau], nccf[tau + 1])
    refined = nccf[tau] - 0.25 * (nccf[tau - 1] - nccf[tau + 1]) * delta
    confidence = float(np.clip(refined, 0.0, 1.0))
    if confidence < ACF_MIN_CONFIDENCE:
        return None, confidence

    f0 = frame.sample_rate / (tau + delta)
    return float(np.clip(f0, cfg.f_min, cfg.f_max)), confidence


def estimate_yin(frame: AudioFrame, cfg: EstimatorConfig) -> Estimate:
    """YIN: cumulative-mean-normalized difference function minimum.

    The squared difference d(tau) is computed over a fixed integration
    window via FFT correlation, normalized by its cumulative mean, and the
    first local minimum below cfg.yin_threshold within the lag range is
    taken as the period. No qualifying minimum means unpitched — there is
    no fallback to the global minimum, which is what rejects noise.
    """
    cfg.check_rate(frame.sample_rate)
    x = frame.samples
    n = x.size
    if n < 64:
        raise ValueError("frame too short for difference function")

    lag_min = max(2, int(math.floor(frame.sample_rate / cfg.f_max)))
    lag_hi = min(int(math.floor(frame.sample_rate / cfg.f_min)), n // 2)
    if lag_min >= lag_hi:
        return None, 0.0
    w = n - lag_hi

    nfft = 1 << (n + lag_hi).bit_length()
    corr = np.fft.irfft(
        np.fft.rfft(x, nfft) * np.conj(np.fft.rfft(x[:w], nfft))
    )[: lag_hi + 1]
    cums = np.concatenate([[0.0], np.cumsum(x * x)])
    taus = np.arange(lag_hi + 1)
    d = cums[w] + (cums[taus + w] - cums[taus]) - 2.0 * corr
    d = np.maximum(d, 0.0)

    running = np.cumsum(d[1:])
    cmnd = np.ones(lag_hi + 1)
    nonzero = running > 0
    cmnd[1:][nonzero] = d[1:][nonzero] * taus[1:][nonzero] / running[nonzero]

    tau = _first_dip(cmnd, lag_min, lag_hi, cfg.yin_threshold)
    if tau is None:
        return None, 0.0

    delta = 0.0
    if 0 < tau < lag_hi:
        delta = _parabolic_delta(cmnd[tau - 1], cmnd[tau], cmnd[tau + 1])
    confidence = float(np.clip(1.0 - cmnd[tau], 0.0, 1.0))
    f0 = frame.sample_rate / (tau + delta)
    return float(np.clip(f0, cfg.f_min, cfg.f_max)), confidence


def _first_dip(cmnd: np.ndarray, lag_min: int, lag_hi: int, threshold: float) -> int | None:
    tau = lag_min
    while tau <= lag_hi:
        if cmnd[tau] < threshold:
            while tau + 1 <= lag_hi and cmnd[tau + 1] < cmnd[tau]:
                tau += 1
            return tau
        tau += 1
    return None


ESTIMATORS: dict[str, PitchEstimator] = {
    "fft_peak": estimate_fft_peak,
    "acf": estimate_acf,
    "yin": estimate_yin,
}


def get_estimator(name: str) -> PitchEstimator:
    try:
        return ESTIMATORS[name]
    except KeyError:
        raise ValueError(
            f"unknown estimator {name!r}; choose from {sorted(ESTIMATORS)}"
        ) from None
