import json

import numpy as np
import pytest

from voiceflight.audio import AudioClip, read_wav
from voiceflight.game import LevelConfig, resimulate, run_trace, session_metrics
from voiceflight.store import (
    CorruptStoreError,
    NotFoundError,
    SessionStore,
    validate_emr,
)

from ._support import golden_metrics_trace, random_level, random_trace


@pytest.fixture
def store(tmp_path):
    return SessionStore(tmp_path / "store")


def saved_session(store, patient_id, seed=11, with_recording=False):
    rng = np.random.default_rng(seed)
    level = random_level(rng)
    trace = random_trace(rng, 60)
    _, telemetry = run_trace(level, trace, 0.05)
    metrics = session_metrics(telemetry, level)
    recording = None
    if with_recording:
        recording = AudioClip(rng.uniform(-0.5, 0.5, 4410), 44100)
    return store.save_therapy(
        patient_id, level, telemetry, metrics, recording, estimator_name="yin"
    )


# -- patients -----------------------------------------------------------------

def test_create_and_get_patient(store):
    p = store.create_patient("Ana", "")
    assert store.get_patient(p.id) == p
    assert store.list_patients() == [p]


def test_empty_name_rejected(store):
    with pytest.raises(ValueError):
        store.create_patient("")


def test_patient_ids_unique(store):
    a = store.create_patient("Ana")
    b = store.create_patient("Ana")
    assert a.id != b.id


def test_unknown_patient(store):
    with pytest.raises(NotFoundError):
        store.get_patient("pt-missing")


# -- sessions -----------------------------------------------------------------

def test_save_then_load_round_trip(store):
    p = store.create_patient("Ana")
    saved = saved_session(store, p.id)
    assert store.load_session(saved.id) == saved
    assert store.list_sessions(p.id) == [saved]


def test_save_for_unknown_patient(store):
    level, samples, dt = golden_metrics_trace()
    _, telemetry = run_trace(level, samples, dt)
    metrics = session_metrics(telemetry, level)
    with pytest.raises(NotFoundError):
        store.save_therapy("pt-missing", level, telemetry, metrics)


def test_recording_readable_after_save(store):
    p = store.create_patient("Ana")
    saved = saved_session(store, p.id, with_recording=True)
    assert saved.recording_path is not None
    clip = read_wav(store.root / saved.recording_path)
    assert clip.samples.size == 4410


def test_replay_reproduces_score(store):
    p = store.create_patient("Ana")
    saved = saved_session(store, p.id, seed=13)
    level, telemetry, recording = store.replay(saved.id)
    final, _ = resimulate(level, [(t.dt, t.sample) for t in telemetry])
    assert final.score == saved.metrics.score
    assert recording is None


def test_replay_missing_telemetry_is_corruption(store):
    p = store.create_patient("Ana")
    saved = saved_session(store, p.id)
    (store.root / saved.telemetry_path).unlink()
    with pytest.raises(CorruptStoreError) as err:
        store.replay(saved.id)
    assert saved.telemetry_path.split("/")[-1] in str(err.value)


def test_append_only_prefix(store):
    p = store.create_patient("Ana")
    ids = []
    for i in range(4):
        before = [s.id for s in store.list_sessions(p.id)]
        assert before == ids
        saved = saved_session(store, p.id, seed=40 + i)
        ids.append(saved.id)
    assert [s.id for s in store.list_sessions(p.id)] == ids


def test_crash_between_files_and_index_is_invisible(store, monkeypatch):
    p = store.create_patient("Ana")
    saved_session(store, p.id, seed=50)

    def boom(pdir, entry):
        raise OSError("simulated crash before index append")

    monkeypatch.setattr(store, "_append_session_index", boom)
    with pytest.raises(OSError):
        saved_session(store, p.id, seed=51)
    monkeypatch.undo()

    sessions = store.list_sessions(p.id)
    assert len(sessions) == 1  # the interrupted save never became visible
    # every listed session still resolves
    for s in sessions:
        store.replay(s.id)
    # and the store accepts new saves afterwards
    saved_session(store, p.id, seed=52)
    assert len(store.list_sessions(p.id)) == 2


# -- trends ------------------------------------------------------------------------

def seeded_metrics_session(store, patient_id, phonation_ms):
    level = LevelConfig(rng_seed=1, session_duration_s=10.0)
    from voiceflight.game import ControlSample

    n_voiced = phonation_ms // 100
    samples = [ControlSample(voiced=True, pitch_mel=250.0)] * n_voiced
    samples += [ControlSample(voiced=False)] * (100 - n_voiced)
    _, telemetry = run_trace(level, samples, 0.1)
    metrics = session_metrics(telemetry, level)
    assert metrics.phonation_time_ms == phonation_ms
    return store.save_therapy(patient_id, level, telemetry, metrics)


def test_trend_slope_on_collinear_points(store):
    p = store.create_patient("Ana")
    for ms in (1000, 1500, 2000):
        seeded_metrics_session(store, p.id, ms)
    trend = store.trend(p.id, "phonation_time_ms")
    assert trend.slope == 500.0
    assert trend.n == 3
    assert [pt.value for pt in trend.points] == [1000.0, 1500.0, 2000.0]


def test_trend_single_session_has_no_slope(store):
    p = store.create_patient("Ana")
    seeded_metrics_session(store, p.id, 1000)
    trend = store.trend(p.id, "phonation_time_ms")
    assert trend.slope is None
    assert trend.n == 1
    assert len(trend.points) == 1


def test_trend_constant_series_zero_slope(store):
    p = store.create_patient("Ana")
    for _ in range(3):
        seeded_metrics_session(store, p.id, 1500)
    assert store.trend(p.id, "phonation_time_ms").slope == 0.0


def test_trend_skips_absent_values(store):
    p = store.create_patient("Ana")
    seeded_metrics_session(store, p.id, 0)  # never voiced: reaction absent
    seeded_metrics_session(store, p.id, 1000)
    seeded_metrics_session(store, p.id, 1000)
    trend = store.trend(p.id, "reaction_time_ms")
    assert trend.n == 2
    assert [pt.session_index for pt in trend.points] == [0, 1]


def test_trend_unknown_metric_rejected(store):
    p = store.create_patient("Ana")
    with pytest.raises(ValueError):
        store.trend(p.id, "grbas_score")


# -- EMR ------------------------------------------------------------------------------

def test_emr_empty_patient_is_valid(store):
    p = store.create_patient("Ana", "first consult")
    doc = store.export_emr(p.id)
    validate_emr(doc)
    assert doc["sessions"] == []
    assert doc["patient"]["display_name"] == "Ana"


def test_emr_export_is_pure(store):
    p = store.create_patient("Ana")
    for ms in (1000, 1500):
        seeded_metrics_session(store, p.id, ms)
    a = json.dumps(store.export_emr(p.id))
    b = json.dumps(store.export_emr(p.id))
    assert a == b


def test_emr_contains_all_four_factors(store):
    p = store.create_patient("Ana")
    seeded_metrics_session(store, p.id, 1000)
    doc = store.export_emr(p.id)
    validate_emr(doc)
    assert set(doc["trends"]) == {
        "phonation_time_ms", "pitch_change_mel", "duration_s", "reaction_time_ms",
    }


def test_validate_emr_catches_missing_keys(store):
    p = store.create_patient("Ana")
    doc = store.export_emr(p.id)
    del doc["trends"]
    with pytest.raises(ValueError):
        validate_emr(doc)


def test_emr_unknown_patient(store):
    with pytest.raises(NotFoundError):
        store.export_emr("pt-missing")
