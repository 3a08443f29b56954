import json

import numpy as np
import pytest
from click.testing import CliRunner

from voiceflight.audio import AudioClip, write_wav
from voiceflight.bench import parse_report, rank
from voiceflight.cli import main

from ._support import make_tone


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def tone_wav(tmp_path):
    path = tmp_path / "tone440.wav"
    write_wav(make_tone(440.0, duration=1.0, amplitude=0.6), path)
    return str(path)


@pytest.fixture
def silent_wav(tmp_path):
    path = tmp_path / "silence.wav"
    write_wav(AudioClip(np.full(44100, 1e-6), 44100), path)
    return str(path)


def canonical_sim_fixture(tmp_path):
    level_path = tmp_path / "level.json"
    trace_path = tmp_path / "trace.json"
    level_path.write_text(json.dumps({"rng_seed": 42, "session_duration_s": 20.0}))
    samples = []
    for k in range(400):
        t = k * 0.05
        if int(t) % 2 == 0:
            samples.append(
                {"voiced": True, "pitch_mel": 250.0 if (k // 40) % 2 == 0 else 150.0}
            )
        else:
            samples.append({"voiced": False, "pitch_mel": None})
    trace_path.write_text(json.dumps({"dt": 0.05, "samples": samples}))
    return str(level_path), str(trace_path)


# -- analyze -----------------------------------------------------------------

def test_analyze_tone(runner, tone_wav):
    result = runner.invoke(main, ["analyze", tone_wav, "--estimator", "yin"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "time,f0_hz,pitch_mel,midi_note,midi_number,loudness_db,voiced"
    rows = [line.split(",") for line in lines[1:]]
    interior = rows[2:-2]
    assert all(r[6] == "true" for r in interior)
    assert all(r[4] == "69" for r in interior)
    assert all(r[3] == "A4" for r in interior)


def test_analyze_silence(runner, silent_wav):
    result = runner.invoke(main, ["analyze", silent_wav])
    assert result.exit_code == 0
    rows = result.output.strip().splitlines()[1:]
    assert all(row.endswith(",false") for row in rows)
    assert all(row.split(",")[1] == "" for row in rows)


def test_analyze_deterministic(runner, tone_wav):
    a = runner.invoke(main, ["analyze", tone_wav])
    b = runner.invoke(main, ["analyze", tone_wav])
    assert a.output == b.output


def test_analyze_missing_file(runner):
    result = runner.invoke(main, ["analyze", "nope.wav"])
    assert result.exit_code != 0


# -- bench ------------------------------------------------------------------------

def test_bench_deterministic_and_ranked(runner, tmp_path):
    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    res_a = runner.invoke(main, ["bench", "--seed", "42", "--out", str(out_a)])
    res_b = runner.invoke(main, ["bench", "--seed", "42", "--out", str(out_b)])
    assert res_a.exit_code == 0 and res_b.exit_code == 0
    assert out_a.read_bytes() == out_b.read_bytes()

    reports = parse_report(out_a, "csv")
    ranking = rank(reports)
    printed = [
        line.split()[1] for line in res_a.output.splitlines() if line[:1].isdigit()
    ]
    assert printed == ranking


def test_bench_unknown_format(runner, tmp_path):
    result = runner.invoke(
        main, ["bench", "--out", str(tmp_path / "r.xml"), "--format", "xml"]
    )
    assert result.exit_code != 0


# -- simulate -------------------------------------------------------------------------

def test_simulate_golden_score(runner, tmp_path):
    level_path, trace_path = canonical_sim_fixture(tmp_path)
    out = tmp_path / "telemetry.jsonl"
    result = runner.invoke(main, ["simulate", level_path, trace_path, "--out", str(out)])
    assert result.exit_code == 0
    # golden values established by the deterministic engine on first run
    assert "status=game_over score=4" in result.output
    assert len(out.read_text().strip().splitlines()) == 287


def test_simulate_silent_trace_completes(runner, tmp_path):
    level_path = tmp_path / "level.json"
    trace_path = tmp_path / "trace.json"
    level_path.write_text(
        json.dumps(
            {
                "rng_seed": 6,
                "session_duration_s": 8.0,
                "planet_radius": 0.001,
                "ship_radius": 0.001,
            }
        )
    )
    trace_path.write_text(
        json.dumps({"dt": 0.05, "samples": [{"voiced": False, "pitch_mel": None}] * 170})
    )
    result = runner.invoke(main, ["simulate", str(level_path), str(trace_path)])
    assert result.exit_code == 0
    assert "status=completed" in result.output


def test_simulate_invalid_level(runner, tmp_path):
    level_path = tmp_path / "bad.json"
    trace_path = tmp_path / "trace.json"
    level_path.write_text(json.dumps({"session_duration_s": -5}))
    trace_path.write_text(json.dumps({"dt": 0.05, "samples": []}))
    result = runner.invoke(main, ["simulate", str(level_path), str(trace_path)])
    assert result.exit_code != 0
    assert "invalid level" in result.output
