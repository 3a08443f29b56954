from .config import EstimatorConfig
from .estimators import (
    ESTIMATORS,
    Estimate,
    PitchEstimator,
    estimate_acf,
    estimate_fft_peak,
    estimate_yin,
    get_estimator,
)
from .loudness import LOUDNESS_FLOOR_DB, loudness_db
from .pipeline import PitchFrame, analyze, analyze_all, smooth
from .scales import hz_to_mel, hz_to_midi, mel_to_hz, midi_note_name

__all__ = [
    "EstimatorConfig",
    "PitchFrame",
    "ESTIMATORS",
    "Estimate",
    "PitchEstimator",
    "analyze",
    "analyze_all",
    "smooth",
    "estimate_acf",
    "estimate_fft_peak",
    "estimate_yin",
    "get_estimator",
    "hz_to_mel",
    "hz_to_midi",
    "mel_to_hz",
    "midi_note_name",
    "loudness_db",
    "LOUDNESS_FLOOR_DB",
]
