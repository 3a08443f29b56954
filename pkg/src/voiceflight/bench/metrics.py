"""Scoring and ranking of pitch estimators against corpus ground truth."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from ..analysis.config import EstimatorConfig
from ..analysis.estimators import ESTIMATORS
from ..audio.framing import frame_stream
from .corpus import CorpusItem

GROSS_ERROR_THRESHOLD = 0.2  # relative error beyond which a frame is "gross"

TrackFn = Callable[[CorpusItem, EstimatorConfig], Sequence[float | None]]


@dataclass(frozen=True)
class BenchEstimator:
    """A named track-level estimator: corpus item in, one f0 (or None) per
    truth frame out. Real estimators never see the truth; test doubles may."""

    name: str
    track: TrackFn


@dataclass(frozen=True)
class BenchReport:
    estimator: str
    gpe_rate: float
    fpe_cents: float
    voicing_false_alarm: float
    voicing_miss: float
    runtime_per_frame: float

    def __post_init__(self):
        for field in ("gpe_rate", "voicing_false_alarm", "voicing_miss"):
            v = getattr(self, field)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{field} must lie in [0, 1], got {v}")
        if self.fpe_cents < 0:
            raise ValueError("fpe_cents must be non-negative")

    def without_runtime(self) -> "BenchReport":
        return replace(self, runtime_per_frame=0.0)


def builtin_bench_estimators(window: int | None = None, hop: int | None = None) -> list[BenchEstimator]:
    """The three frame estimators wrapped to produce whole-clip tracks."""

    def make(name: str) -> BenchEstimator:
        fn = ESTIMATORS[name]

        def track(item: CorpusItem, cfg: EstimatorConfig) -> list[float | None]:
            from ..audio.framing import default_window_hop

            w, h = (window, hop)
            if w is None or h is None:
                w, h = default_window_hop(item.clip.sample_rate)
            return [fn(fr, cfg)[0] for fr in frame_stream(item.clip, w, h)]

        return BenchEstimator(name=name, track=track)

    return [make(name) for name in sorted(ESTIMATORS)]


def evaluate(
    estimator: BenchEstimator, corpus: Sequence[CorpusItem], cfg: EstimatorConfig
) -> BenchReport:
    """Score one estimator over a corpus.

    gpe_rate: share of frames voiced in both truth and estimate whose
      relative error exceeds 20%.
    fpe_cents: mean absolute cents error over the gross-correct frames.
    voicing_false_alarm / voicing_miss: voicing decision errors against
      truth presence/absence.
    """
    if not corpus:
        raise ValueError("corpus must be nonempty")

    both = gross = 0
    fine_cents_sum = 0.0
    fine_n = 0
    truth_voiced = truth_unvoiced = miss = false_alarm = 0
    total_frames = 0
    elapsed = 0.0

    for item in corpus:
        t0 = time.perf_counter()
        estimates = list(estimator.track(item, cfg))
        elapsed += time.perf_counter() - t0
        if len(estimates) != len(item.truth):
            raise ValueError(
                f"estimator {estimator.name!r} returned {len(estimates)} frames "
                f"for {len(item.truth)} truth entries on {item.clip.source_label!r}"
            )
        total_frames += len(estimates)
        for (_, truth_f0), est_f0 in zip(item.truth, estimates):
            if truth_f0 is None:
                truth_unvoiced += 1
                if est_f0 is not None:
                    false_alarm += 1
                continue
            truth_voiced += 1
            if est_f0 is None:
                miss += 1
                continue
            both += 1
            rel_err = abs(est_f0 - truth_f0) / truth_f0
            if rel_err > GROSS_ERROR_THRESHOLD:
                gross += 1
            else:
                fine_cents_sum += abs(1200.0 * math.log2(est_f0 / truth_f0))
                fine_n += 1

    return BenchReport(
        estimator=estimator.name,
        gpe_rate=gross / both if both else 0.0,
        fpe_cents=fine_cents_sum / fine_n if fine_n else 0.0,
        voicing_false_alarm=false_alarm / truth_unvoiced if truth_unvoiced else 0.0,
        voicing_miss=miss / truth_voiced if truth_voiced else 0.0,
        runtime_per_frame=elapsed / total_frames if total_frames else 0.0,
    )


def rank(reports: Sequence[BenchReport]) -> list[str]:
    """Best-first estimator names: gross accuracy, then fine accuracy, then
    combined voicing error; ties break alphabetically."""
    if not reports:
        raise ValueError("need at least one report to rank")
    ordered = sorted(
        reports,
        key=lambda r: (
            r.gpe_rate,
            r.fpe_cents,
            r.voicing_miss + r.voicing_false_alarm,
            r.estimator,
        ),
    )
    return [r.estimator for r in ordered]
