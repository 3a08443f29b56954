import numpy as np
import pytest

from voiceflight.game import (
    ControlSample,
    LevelConfig,
    run_trace,
    session_metrics,
)

from ._support import golden_metrics_trace, random_level, random_trace


def test_golden_session_metrics():
    level, samples, dt = golden_metrics_trace()
    _, telemetry = run_trace(level, samples, dt)
    m = session_metrics(telemetry, level)
    assert m.phonation_time_ms == 3000
    assert m.pitch_change_mel == 80.0
    assert m.duration_s == 10.0
    assert m.reaction_time_ms == 1200


def test_all_unvoiced_metrics():
    level = LevelConfig(rng_seed=1)
    _, telemetry = run_trace(level, [ControlSample(voiced=False)] * 50, 0.1)
    m = session_metrics(telemetry, level)
    assert m.phonation_time_ms == 0
    assert m.pitch_change_mel == 0.0
    assert m.reaction_time_ms is None
    assert m.mean_pitch_mel is None


def test_single_voiced_sample_has_zero_pitch_change():
    level = LevelConfig(rng_seed=1)
    samples = [ControlSample(voiced=False)] * 5
    samples[2] = ControlSample(voiced=True, pitch_mel=200.0)
    _, telemetry = run_trace(level, samples, 0.1)
    m = session_metrics(telemetry, level)
    assert m.pitch_change_mel == 0.0
    assert m.mean_pitch_mel == 200.0
    assert m.phonation_time_ms == 100


def test_empty_telemetry_rejected():
    with pytest.raises(ValueError):
        session_metrics([], LevelConfig())


def test_metric_bounds_on_random_traces():
    rng = np.random.default_rng(31)
    for _ in range(10):
        level = random_level(rng)
        trace = random_trace(rng, int(rng.integers(10, 120)))
        _, telemetry = run_trace(level, trace, 0.05)
        m = session_metrics(telemetry, level)
        assert m.phonation_time_ms <= m.duration_s * 1000 + 0.5
        if m.reaction_time_ms is not None:
            assert m.reaction_time_ms <= m.duration_s * 1000
        assert m.pitch_change_mel >= 0.0


def test_metrics_dict_round_trip():
    level, samples, dt = golden_metrics_trace()
    _, telemetry = run_trace(level, samples, dt)
    m = session_metrics(telemetry, level)
    from voiceflight.game import SessionMetrics

    assert SessionMetrics.from_dict(m.to_dict()) == m
