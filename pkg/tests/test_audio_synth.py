import math

import numpy as np
import pytest

from voiceflight.audio import ToneSpec, frame_stream, synth_tone

from ._support import make_tone


def zero_crossings(x: np.ndarray) -> int:
    signs = np.sign(x[x != 0])
    return int(np.sum(signs[1:] != signs[:-1]))


def test_clean_sine_rms():
    clip = make_tone(440.0, amplitude=1.0)
    rms = math.sqrt(float(np.mean(clip.samples**2)))
    assert rms == pytest.approx(1 / math.sqrt(2), abs=1e-3)


def test_zero_amplitude_is_silence():
    clip = make_tone(200.0, amplitude=0.0)
    assert not np.any(clip.samples)


def test_glide_zero_crossings_between_endpoints():
    # independent oracle: count sign changes of the rendered waveforms
    glide = synth_tone(
        ToneSpec(f0_trajectory=((0.0, 200.0), (1.0, 300.0)), amplitude=0.8, duration=1.0),
        44100,
    )
    low = make_tone(200.0)
    high = make_tone(300.0)
    zc = zero_crossings(glide.samples)
    assert zero_crossings(low.samples) < zc < zero_crossings(high.samples)


@pytest.mark.parametrize("f0", [100.0, 220.0, 440.0, 990.0])
def test_clean_tone_fft_peak_within_one_bin(f0):
    clip = make_tone(f0, amplitude=0.8)
    frame = frame_stream(clip, 2048, 512)[20]
    mag = np.abs(np.fft.rfft(frame.samples * np.hanning(2048)))
    peak_hz = np.argmax(mag) * 44100 / 2048
    assert abs(peak_hz - f0) <= 44100 / 2048


def test_noise_seed_determinism():
    a = make_tone(220.0, snr_db=10.0, noise_seed=5)
    b = make_tone(220.0, snr_db=10.0, noise_seed=5)
    c = make_tone(220.0, snr_db=10.0, noise_seed=6)
    assert np.array_equal(a.samples, b.samples)
    assert not np.array_equal(a.samples, c.samples)


def test_snr_sets_noise_level():
    clean = make_tone(220.0, amplitude=0.5)
    noisy = make_tone(220.0, amplitude=0.5, snr_db=20.0)
    noise = noisy.samples - clean.samples
    sig_rms = math.sqrt(float(np.mean(clean.samples**2)))
    noise_rms = math.sqrt(float(np.mean(noise**2)))
    assert 20 * math.log10(sig_rms / noise_rms) == pytest.approx(20.0, abs=0.5)


def test_samples_stay_in_range():
    clip = make_tone(150.0, amplitude=1.0, snr_db=6.0, harmonics=5)
    assert np.min(clip.samples) >= -1.0 and np.max(clip.samples) <= 1.0


def test_trajectory_validation():
    with pytest.raises(ValueError):
        ToneSpec(f0_trajectory=((0.0, 10.0), (1.0, 10.0)), amplitude=0.5, duration=1.0)
    with pytest.raises(ValueError):
        ToneSpec(f0_trajectory=((0.0, 100.0), (1.0, 100.0)), amplitude=0.5, duration=0.0)
