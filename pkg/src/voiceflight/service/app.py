"""Local HTTP + websocket service fronting the analysis/game/store core.

Game state is authoritative here: clients send raw audio and render the
telemetry they get back, they never simulate anything themselves.
"""

from __future__ import annotations

import json
import uuid
from pathlib import Path

from fastapi import FastAPI, HTTPException, WebSocket, WebSocketDisconnect
from fastapi.responses import Response, StreamingResponse
from pydantic import BaseModel

from ..analysis.config import EstimatorConfig
from ..analysis.estimators import ESTIMATORS
from ..bench.corpus import generate_corpus
from ..bench.metrics import builtin_bench_estimators, evaluate, rank
from ..game.level import LevelConfig, LevelValidationError
from ..store.store import NotFoundError, SessionStore
from .levels import LevelStore
from .live import LivePipeline
from .wire import WireProtocolError, parse_wire_frame

WS_PROTOCOL_ERROR = 4400
WS_NOT_FOUND = 4404


class PatientIn(BaseModel):
    display_name: str
    notes: str = ""


class LevelIn(BaseModel):
    name: str
    config: dict


class SessionStartIn(BaseModel):
    patient_id: str
    level_id: str
    estimator: str | None = None


def create_app(
    store_root: str | Path,
    estimator: str = "yin",
    cfg: EstimatorConfig | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    if estimator not in ESTIMATORS:
        raise ValueError(f"unknown estimator {estimator!r}")
    app = FastAPI(title="voiceflight", version="0.1.0")
    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")
    store = SessionStore(store_root)
    levels = LevelStore(store_root)
    cfg = cfg or EstimatorConfig()
    pending: dict[str, dict] = {}  # started but not yet finished live sessions
    bench_cache: dict[int, list] = {}

    def parse_level(payload: LevelIn) -> LevelConfig:
        try:
            return LevelConfig.from_dict(payload.config)
        except LevelValidationError as e:
            raise HTTPException(status_code=422, detail={"invalid_fields": e.fields})

    # -- patients -----------------------------------------------------------

    @app.get("/patients")
    def list_patients():
        return [p.to_dict() for p in store.list_patients()]

    @app.post("/patients", status_code=201)
    def create_patient(payload: PatientIn):
        try:
            return store.create_patient(payload.display_name, payload.notes).to_dict()
        except ValueError as e:
            raise HTTPException(status_code=422, detail=str(e))

    # -- levels ---------------------------------------------------------------

    @app.get("/levels")
    def list_levels():
        return [rec.to_dict() for rec in levels.list()]

    @app.post("/levels", status_code=201)
    def create_level(payload: LevelIn):
        return levels.create(payload.name, parse_level(payload)).to_dict()

    @app.get("/levels/{level_id}")
    def get_level(level_id: str):
        try:
            return levels.get(level_id).to_dict()
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no such level: {level_id}")

    @app.put("/levels/{level_id}")
    def update_level(level_id: str, payload: LevelIn):
        try:
            return levels.update(level_id, payload.name, parse_level(payload)).to_dict()
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no such level: {level_id}")

    # -- sessions -------------------------------------------------------------

    @app.post("/sessions", status_code=201)
    def start_session(payload: SessionStartIn):
        try:
            store.get_patient(payload.patient_id)
        except NotFoundError:
            raise HTTPException(status_code=404, detail=f"no such patient: {payload.patient_id}")
        try:
            level = levels.get(payload.level_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no such level: {payload.level_id}")
        est = payload.estimator or estimator
        if est not in ESTIMATORS:
            raise HTTPException(status_code=422, detail=f"unknown estimator: {est}")
        session_id = f"live-{uuid.uuid4().hex[:12]}"
        pending[session_id] = {
            "patient_id": payload.patient_id,
            "level": level.config,
            "estimator": est,
        }
        return {
            "session_id": session_id,
            "patient_id": payload.patient_id,
            "level_id": payload.level_id,
            "estimator": est,
        }

    @app.get("/sessions")
    def list_sessions(patient: str):
        try:
            return [s.to_dict() for s in store.list_sessions(patient)]
        except NotFoundError:
            raise HTTPException(status_code=404, detail=f"no such patient: {patient}")

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        try:
            return store.load_session(session_id).to_dict()
        except NotFoundError:
            raise HTTPException(status_code=404, detail=f"no such session: {session_id}")

    @app.get("/sessions/{session_id}/replay")
    def replay_session(session_id: str):
        try:
            _, telemetry, _ = store.replay(session_id)
        except NotFoundError:
            raise HTTPException(status_code=404, detail=f"no such session: {session_id}")

        def lines():
            for t in telemetry:
                yield json.dumps(t.to_dict(), ensure_ascii=False) + "\n"

        return StreamingResponse(lines(), media_type="application/x-ndjson")

    @app.get("/sessions/{session_id}/recording")
    def session_recording(session_id: str):
        try:
            session = store.load_session(session_id)
        except NotFoundError:
            raise HTTPException(status_code=404, detail=f"no such session: {session_id}")
        if session.recording_path is None:
            raise HTTPException(status_code=404, detail="session has no recording")
        data = (store.root / session.recording_path).read_bytes()
        return Response(content=data, media_type="audio/wav")

    @app.get("/patients/{patient_id}/trends/{metric_name}")
    def patient_trend(patient_id: str, metric_name: str):
        try:
            return store.trend(patient_id, metric_name).to_dict()
        except NotFoundError:
            raise HTTPException(status_code=404, detail=f"no such patient: {patient_id}")
        except ValueError as e:
            raise HTTPException(status_code=422, detail=str(e))

    @app.get("/patients/{patient_id}/emr")
    def patient_emr(patient_id: str):
        try:
            return store.export_emr(patient_id)
        except NotFoundError:
            raise HTTPException(status_code=404, detail=f"no such patient: {patient_id}")

    # -- benchmark ------------------------------------------------------------

    @app.get("/bench/report")
    def bench_report(seed: int = 42):
        if seed not in bench_cache:
            corpus = generate_corpus(seed)
            reports = [
                evaluate(e, corpus, cfg) for e in builtin_bench_estimators()
            ]
            bench_cache[seed] = reports
        reports = bench_cache[seed]
        return {
            "seed": seed,
            "ranking": rank(reports),
            "reports": [
                {
                    "estimator": r.estimator,
                    "gpe_rate": r.gpe_rate,
                    "fpe_cents": r.fpe_cents,
                    "voicing_false_alarm": r.voicing_false_alarm,
                    "voicing_miss": r.voicing_miss,
                    "runtime_per_frame": r.runtime_per_frame,
                }
                for r in reports
            ],
        }

    # -- live stream ------------------------------------------------------------

    @app.websocket("/live/{session_id}")
    async def live(ws: WebSocket, session_id: str):
        await ws.accept()
        binding = pending.get(session_id)
        if binding is None:
            await ws.close(code=WS_NOT_FOUND, reason="unknown session")
            return

        pipeline = LivePipeline(
            level=binding["level"], cfg=cfg, estimator=binding["estimator"]
        )
        try:
            while not pipeline.done:
                data = await ws.receive_bytes()
                try:
                    wire = parse_wire_frame(data)
                    messages = pipeline.feed(wire)
                except WireProtocolError as e:
                    await ws.send_json({"kind": "error", "payload": str(e)})
                    await ws.close(code=WS_PROTOCOL_ERROR, reason=str(e))
                    pending.pop(session_id, None)
                    return
                for msg in messages:
                    await ws.send_json(msg)
        except WebSocketDisconnect:
            # aborted stream: nothing persisted
            pending.pop(session_id, None)
            return

        metrics, recording, stats = pipeline.finish()
        session = store.save_therapy(
            binding["patient_id"],
            binding["level"],
            pipeline.telemetry,
            metrics,
            recording,
            estimator_name=binding["estimator"],
        )
        pending.pop(session_id, None)
        await ws.send_json(
            {
                "kind": "session_end",
                "payload": {
                    "session_id": session.id,
                    "metrics": metrics.to_dict(),
                    **stats,
                },
            }
        )
        await ws.close()

    return app
