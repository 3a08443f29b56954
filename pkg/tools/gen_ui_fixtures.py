#!/usr/bin/env python3
"""Generate recorded-server fixtures for the frontend contract tests.

Run from the repo root after changing wire formats, endpoint schemas, or
level fields:

    python3 tools/gen_ui_fixtures.py

Writes frontend/fixtures/*.json. Generation itself asserts the loopback
contract (live telemetry == offline analysis) before recording anything.
"""

import base64
import json
from pathlib import Path

from fastapi.testclient import TestClient

from voiceflight.analysis import EstimatorConfig, analyze_all
from voiceflight.audio import (
    ToneSpec,
    default_window_hop,
    frame_stream,
    read_wav,
    synth_tone,
    write_wav,
)
from voiceflight.game import ControlSample, LevelConfig, run_trace, session_metrics
from voiceflight.service import pack_wire_frame
from voiceflight.service.app import create_app
from voiceflight.store import SessionStore

FIXTURES = Path(__file__).resolve().parent.parent / "frontend" / "fixtures"
CHUNK = 4410  # 100 ms at 44.1 kHz
RATE = 44100


def fixture_clip(tmp: Path):
    spec = ToneSpec(
        f0_trajectory=((0.0, 220.0), (1.5, 300.0)), amplitude=0.5, duration=1.5
    )
    path = tmp / "ui-fixture.wav"
    write_wav(synth_tone(spec, RATE), path)
    return read_wav(path)


def wire_chunks(clip):
    chunks = []
    i = 0
    while i < clip.samples.size:
        part = clip.samples[i : i + CHUNK].astype("<f4")
        ts = i * 1_000_000 // RATE
        chunks.append(pack_wire_frame(RATE, ts, part))
        i += CHUNK
    return chunks


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    tmp = FIXTURES.parent / ".fixture-tmp"
    tmp.mkdir(exist_ok=True)

    clip = fixture_clip(tmp)
    cfg = EstimatorConfig()
    window, hop = default_window_hop(RATE)
    offline = [pf.to_dict() for pf in analyze_all(frame_stream(clip, window, hop), cfg, "yin")]

    store_root = tmp / "store"
    app = create_app(store_root, estimator="yin")
    with TestClient(app) as client:
        pid = client.post("/patients", json={"display_name": "Fixture Patient"}).json()["id"]
        lid = client.post(
            "/levels", json={"name": "fixture", "config": {"session_duration_s": 600.0}}
        ).json()["id"]
        sid = client.post("/sessions", json={"patient_id": pid, "level_id": lid}).json()[
            "session_id"
        ]

        live_pitch = []
        with client.websocket_connect(f"/live/{sid}") as ws:
            for chunk in wire_chunks(clip):
                ws.send_bytes(chunk)
            for _ in range(len(offline) * 2):
                msg = ws.receive_json()
                if msg["kind"] == "pitch":
                    live_pitch.append(msg["payload"])

        canon = lambda rows: json.loads(json.dumps(rows))
        assert canon(live_pitch) == canon(offline), "loopback contract broken"

        # -- level editor round trip ------------------------------------------
        config = {
            "sensitivity": 0.4, "x_spread": 0.15, "y_spread": 0.6,
            "incoming_speed": 0.3, "voice_maintenance_ms": 150.0,
            "session_duration_s": 45.0, "pitch_threshold_mel": 210.0,
            "spawn_interval_s": 1.5, "planet_radius": 0.04, "ship_radius": 0.02,
            "rng_seed": 99,
        }
        create_req = {"name": "editor-fixture", "config": config}
        create_resp = client.post("/levels", json=create_req)
        level_id = create_resp.json()["id"]

        updated = dict(config, sensitivity=0.25)
        update_req = {"name": "editor-fixture-v2", "config": updated}
        update_resp = client.put(f"/levels/{level_id}", json=update_req)
        get_resp = client.get(f"/levels/{level_id}")

        levels_fixture = {
            "create_request": create_req,
            "create_response_text": create_resp.text,
            "update_request": update_req,
            "update_response_text": update_resp.text,
            "get_response_text": get_resp.text,
        }

        # -- dashboard: sessions with known metrics ------------------------------
        store = SessionStore(store_root)
        level = LevelConfig(rng_seed=1, session_duration_s=10.0)
        for phonation_ms in (1000, 1500, 2000):
            n_voiced = phonation_ms // 100
            samples = [ControlSample(voiced=True, pitch_mel=250.0)] * n_voiced
            samples += [ControlSample(voiced=False)] * (100 - n_voiced)
            _, telemetry = run_trace(level, samples, 0.1)
            store.save_therapy(
                pid, level, telemetry, session_metrics(telemetry, level),
                estimator_name="yin",
            )

        dashboard_fixture = {
            "patient_id": pid,
            "sessions_response_text": client.get(f"/sessions?patient={pid}").text,
            "trend_response_texts": {
                name: client.get(f"/patients/{pid}/trends/{name}").text
                for name in (
                    "phonation_time_ms", "pitch_change_mel", "duration_s", "reaction_time_ms",
                )
            },
            "emr_response_text": client.get(f"/patients/{pid}/emr").text,
        }

    (FIXTURES / "audio_fixture.json").write_text(
        json.dumps(
            {
                "sample_rate": RATE,
                "chunk_samples": CHUNK,
                "samples": clip.samples.tolist(),
            }
        )
    )
    (FIXTURES / "wire_upload.json").write_text(
        json.dumps(
            {
                "chunk_samples": CHUNK,
                "sample_rate": RATE,
                "chunks_base64": [base64.b64encode(c).decode() for c in wire_chunks(clip)],
            }
        )
    )
    (FIXTURES / "offline_analysis.json").write_text(json.dumps(offline))
    (FIXTURES / "live_pitch.json").write_text(json.dumps(live_pitch))
    (FIXTURES / "levels_roundtrip.json").write_text(json.dumps(levels_fixture))
    (FIXTURES / "dashboard.json").write_text(json.dumps(dashboard_fixture))
    print(f"fixtures written to {FIXTURES}")


if __name__ == "__main__":
    main()
