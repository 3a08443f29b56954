"""Labeled synthetic corpus standing in for a patient voice database.

Every item carries exact ground truth recorded from the generating
trajectory, which is what makes tight accuracy assertions possible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..audio.framing import default_window_hop
from ..audio.synth import synth_tone
from ..audio.types import AudioClip, ToneSpec

CORPUS_RATE = 44100

STEADY_F0S = (80.0, 100.0, 150.0, 220.0, 300.0, 440.0, 600.0)
GLIDES = ((200.0, 300.0), (150.0, 100.0), (300.0, 500.0), (440.0, 220.0))
VIBRATO_CENTERS = (220.0, 330.0)
VOWEL_F0S = (120.0, 180.0, 240.0, 320.0)
SNR_LEVELS = (math.inf, 20.0, 10.0)


@dataclass(frozen=True)
class CorpusItem:
    clip: AudioClip
    truth: tuple[tuple[float, float | None], ...]
    tags: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "truth", tuple(self.truth))
        object.__setattr__(self, "tags", frozenset(self.tags))


def generate_corpus(seed: int) -> list[CorpusItem]:
    """Deterministic corpus: steady tones, glides, vibrato, vowels at three
    SNR levels, plus pure silence and pure noise."""
    window, hop = default_window_hop(CORPUS_RATE)
    items: list[CorpusItem] = []
    index = 0

    def tone_item(spec: ToneSpec, tags: set[str], label: str) -> CorpusItem:
        clip = synth_tone(spec, CORPUS_RATE)
        clip = AudioClip(clip.samples, clip.sample_rate, source_label=label)
        truth = _trajectory_truth(spec, clip.samples.size, window, hop)
        return CorpusItem(clip=clip, truth=truth, tags=frozenset(tags))

    for snr in SNR_LEVELS:
        snr_txt = "inf" if math.isinf(snr) else f"{snr:g}"
        noisy = set() if math.isinf(snr) else {"noisy"}

        for f0 in STEADY_F0S:
            spec = ToneSpec(
                f0_trajectory=((0.0, f0), (1.0, f0)),
                amplitude=0.8,
                duration=1.0,
                snr_db=snr,
                noise_seed=_child_seed(seed, index),
            )
            items.append(tone_item(spec, {"steady"} | noisy, f"steady f0={f0:g} snr={snr_txt}"))
            index += 1

        for f_a, f_b in GLIDES:
            spec = ToneSpec(
                f0_trajectory=((0.0, f_a), (1.2, f_b)),
                amplitude=0.7,
                duration=1.2,
                snr_db=snr,
                noise_seed=_child_seed(seed, index),
            )
            items.append(tone_item(spec, {"glide"} | noisy, f"glide {f_a:g}->{f_b:g} snr={snr_txt}"))
            index += 1

        for center in VIBRATO_CENTERS:
            spec = ToneSpec(
                f0_trajectory=_vibrato_breakpoints(center, 0.03, 5.0, 1.2),
                amplitude=0.7,
                duration=1.2,
                snr_db=snr,
                noise_seed=_child_seed(seed, index),
            )
            items.append(tone_item(spec, {"vibrato"} | noisy, f"vibrato c={center:g} snr={snr_txt}"))
            index += 1

        for f0 in VOWEL_F0S:
            spec = ToneSpec(
                f0_trajectory=((0.0, f0), (1.0, f0)),
                amplitude=0.6,
                duration=1.0,
                snr_db=snr,
                harmonics=5,
                noise_seed=_child_seed(seed, index),
            )
            items.append(tone_item(spec, {"vowel"} | noisy, f"vowel f0={f0:g} snr={snr_txt}"))
            index += 1

    n_sil = CORPUS_RATE  # 1 s
    silence = AudioClip(np.zeros(n_sil), CORPUS_RATE, source_label="silence snr=inf")
    items.append(
        CorpusItem(
            clip=silence,
            truth=_unvoiced_truth(n_sil, CORPUS_RATE, window, hop),
            tags=frozenset({"silence"}),
        )
    )

    rng = np.random.default_rng(np.random.SeedSequence([seed, 999983]))
    noise = np.clip(rng.normal(0.0, 0.1, n_sil), -1.0, 1.0)
    noise_clip = AudioClip(noise, CORPUS_RATE, source_label="noise snr=-inf")
    items.append(
        CorpusItem(
            clip=noise_clip,
            truth=_unvoiced_truth(n_sil, CORPUS_RATE, window, hop),
            tags=frozenset({"noisy"}),
        )
    )
    return items


def clean_items(corpus: list[CorpusItem]) -> list[CorpusItem]:
    return [it for it in corpus if "noisy" not in it.tags and "silence" not in it.tags]


def items_at_snr(corpus: list[CorpusItem], snr_txt: str) -> list[CorpusItem]:
    return [it for it in corpus if it.clip.source_label.endswith(f"snr={snr_txt}")]


def _child_seed(seed: int, index: int) -> int:
    # stable per-item stream regardless of how many items precede it
    return int(np.random.SeedSequence([seed, index]).generate_state(1)[0])


def _vibrato_breakpoints(
    center: float, depth: float, rate_hz: float, duration: float
) -> tuple[tuple[float, float], ...]:
    # piecewise-linear sampling of the vibrato sinusoid, 40 points per cycle
    n = int(round(duration * rate_hz * 40)) + 1
    times = np.linspace(0.0, duration, n)
    freqs = center * (1.0 + depth * np.sin(2.0 * math.pi * rate_hz * times))
    return tuple((float(t), float(f)) for t, f in zip(times, freqs))


def _frame_grid(n_samples: int, window: int, hop: int) -> list[int]:
    if n_samples < window:
        return []
    return [k * hop for k in range((n_samples - window) // hop + 1)]


def _trajectory_truth(
    spec: ToneSpec, n_samples: int, window: int, hop: int
) -> tuple[tuple[float, float | None], ...]:
    # truth is the trajectory at each window center; silence has no pitch
    out = []
    for start in _frame_grid(n_samples, window, hop):
        t_start = start / CORPUS_RATE
        t_center = (start + window / 2) / CORPUS_RATE
        if spec.amplitude == 0.0:
            out.append((t_start, None))
        else:
            out.append((t_start, float(spec.f0_at(t_center))))
    return tuple(out)


def _unvoiced_truth(
    n_samples: int, rate: int, window: int, hop: int
) -> tuple[tuple[float, None], ...]:
    return tuple((start / rate, None) for start in _frame_grid(n_samples, window, hop))
