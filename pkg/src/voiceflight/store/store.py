"""File-backed therapy store: append-only, human-inspectable, crash-safe.

Layout under the store root:
    patients.jsonl                      patient index, one object per line
    <patient_id>/sessions.jsonl         session index, appended last on save
    <patient_id>/session-<id>.json      full session record
    <patient_id>/telemetry-<id>.jsonl   one tick per line
    <patient_id>/voice-<id>.wav         raw voice, when recorded

A save writes every file before appending the index line, so a crash
mid-save leaves files without an index entry (invisible) rather than an
index entry without files (corruption).
"""

from __future__ import annotations

import json
import os
import uuid
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

from ..audio.types import AudioClip
from ..audio.wavio import read_wav, write_wav
from ..game.engine import TelemetryTick
from ..game.level import LevelConfig
from ..game.metrics import CLINICAL_FACTORS, METRIC_FIELDS, SessionMetrics
from .models import SCHEMA_VERSION, Patient, TherapySession, TrendPoint, TrendSeries


class NotFoundError(KeyError):
    pass


class CorruptStoreError(RuntimeError):
    """An index entry points at a file that is missing or unreadable."""


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _new_id(prefix: str) -> str:
    return f"{prefix}-{uuid.uuid4().hex[:12]}"


def _append_line(path: Path, obj: dict) -> None:
    with open(path, "a", encoding="utf-8") as f:
        f.write(json.dumps(obj, ensure_ascii=False) + "\n")
        f.flush()
        os.fsync(f.fileno())


def _read_lines(path: Path) -> list[dict]:
    if not path.exists():
        return []
    return [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines() if line]


class SessionStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    # -- patients ----------------------------------------------------------

    @property
    def _patients_index(self) -> Path:
        return self.root / "patients.jsonl"

    def create_patient(self, display_name: str, notes: str = "") -> Patient:
        if not display_name:
            raise ValueError("display_name must be nonempty")
        patient = Patient(
            id=_new_id("pt"),
            display_name=display_name,
            created_at=_utc_now(),
            notes=notes,
        )
        _append_line(self._patients_index, patient.to_dict())
        return patient

    def list_patients(self) -> list[Patient]:
        return [Patient.from_dict(d) for d in _read_lines(self._patients_index)]

    def get_patient(self, patient_id: str) -> Patient:
        for p in self.list_patients():
            if p.id == patient_id:
                return p
        raise NotFoundError(f"no such patient: {patient_id}")

    # -- sessions ----------------------------------------------------------

    def save_therapy(
        self,
        patient_id: str,
        level: LevelConfig,
        telemetry: Sequence[TelemetryTick],
        metrics: SessionMetrics,
        recording: AudioClip | None = None,
        *,
        estimator_name: str = "yin",
        started_at: str | None = None,
    ) -> TherapySession:
        """Persist one finished session; files first, index entry last."""
        self.get_patient(patient_id)  # raises NotFoundError
        sid = _new_id("ts")
        pdir = self.root / patient_id
        pdir.mkdir(exist_ok=True)

        telemetry_rel = f"{patient_id}/telemetry-{sid}.jsonl"
        with open(self.root / telemetry_rel, "w", encoding="utf-8") as f:
            for t in telemetry:
                f.write(json.dumps(t.to_dict(), ensure_ascii=False) + "\n")

        recording_rel = None
        if recording is not None:
            recording_rel = f"{patient_id}/voice-{sid}.wav"
            write_wav(recording, self.root / recording_rel)

        session = TherapySession(
            id=sid,
            patient_id=patient_id,
            started_at=started_at or _utc_now(),
            level=level,
            metrics=metrics,
            telemetry_path=telemetry_rel,
            recording_path=recording_rel,
            estimator_name=estimator_name,
            schema_version=SCHEMA_VERSION,
        )
        (pdir / f"session-{sid}.json").write_text(
            json.dumps(session.to_dict(), ensure_ascii=False, indent=2),
            encoding="utf-8",
        )
        self._append_session_index(pdir, {"id": sid, "started_at": session.started_at})
        return session

    def _append_session_index(self, pdir: Path, entry: dict) -> None:
        # separate method so fault-injection tests can sever it from the
        # file writes above
        _append_line(pdir / "sessions.jsonl", entry)

    def list_sessions(self, patient_id: str) -> list[TherapySession]:
        self.get_patient(patient_id)
        pdir = self.root / patient_id
        sessions = []
        for entry in _read_lines(pdir / "sessions.jsonl"):
            sessions.append(self._load_session_record(pdir, entry["id"]))
        return sessions

    def load_session(self, session_id: str) -> TherapySession:
        for patient in self.list_patients():
            pdir = self.root / patient.id
            for entry in _read_lines(pdir / "sessions.jsonl"):
                if entry["id"] == session_id:
                    return self._load_session_record(pdir, session_id)
        raise NotFoundError(f"no such session: {session_id}")

    def _load_session_record(self, pdir: Path, session_id: str) -> TherapySession:
        path = pdir / f"session-{session_id}.json"
        if not path.exists():
            raise CorruptStoreError(f"missing session record: {path}")
        return TherapySession.from_dict(json.loads(path.read_text(encoding="utf-8")))

    def replay(
        self, session_id: str
    ) -> tuple[LevelConfig, list[TelemetryTick], AudioClip | None]:
        """Everything needed to replay a session exactly as it was saved."""
        session = self.load_session(session_id)
        tpath = self.root / session.telemetry_path
        if not tpath.exists():
            raise CorruptStoreError(f"missing telemetry file: {tpath}")
        telemetry = [TelemetryTick.from_dict(d) for d in _read_lines(tpath)]

        recording = None
        if session.recording_path is not None:
            rpath = self.root / session.recording_path
            if not rpath.exists():
                raise CorruptStoreError(f"missing recording file: {rpath}")
            recording = read_wav(rpath)
        return session.level, telemetry, recording

    # -- longitudinal analysis ---------------------------------------------

    def trend(self, patient_id: str, metric_name: str) -> TrendSeries:
        """Least-squares slope of one metric over a patient's sessions,
        skipping sessions where the metric is absent."""
        if metric_name not in METRIC_FIELDS:
            raise ValueError(
                f"unknown metric {metric_name!r}; choose from {METRIC_FIELDS}"
            )
        sessions = self.list_sessions(patient_id)
        points = []
        for session in sessions:
            value = getattr(session.metrics, metric_name)
            if value is None:
                continue
            points.append(
                TrendPoint(
                    session_index=len(points),
                    started_at=session.started_at,
                    value=float(value),
                )
            )
        return TrendSeries(
            metric_name=metric_name,
            points=tuple(points),
            slope=_ols_slope([p.value for p in points]),
            n=len(points),
        )

    def export_emr(self, patient_id: str) -> dict:
        """Self-contained EMR document: patient, sessions, factor trends."""
        patient = self.get_patient(patient_id)
        sessions = self.list_sessions(patient_id)
        return {
            "schema_version": SCHEMA_VERSION,
            "patient": patient.to_dict(),
            "sessions": [
                {
                    "id": s.id,
                    "started_at": s.started_at,
                    "estimator_name": s.estimator_name,
                    "level": s.level.to_dict(),
                    "metrics": s.metrics.to_dict(),
                }
                for s in sessions
            ],
            "trends": {
                name: self.trend(patient_id, name).to_dict()
                for name in CLINICAL_FACTORS
            },
        }


def _ols_slope(values: list[float]) -> float | None:
    n = len(values)
    if n < 2:
        return None
    x_mean = (n - 1) / 2.0
    y_mean = sum(values) / n
    num = sum((i - x_mean) * (v - y_mean) for i, v in enumerate(values))
    den = sum((i - x_mean) ** 2 for i in range(n))
    return num / den


def validate_emr(doc: dict) -> None:
    """Check an EMR document against the published schema; raises ValueError."""
    required = {"schema_version", "patient", "sessions", "trends"}
    missing = required - set(doc)
    if missing:
        raise ValueError(f"EMR document missing keys: {sorted(missing)}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version: {doc['schema_version']}")
    for key in ("id", "display_name", "created_at", "notes"):
        if key not in doc["patient"]:
            raise ValueError(f"EMR patient header missing {key!r}")
    for s in doc["sessions"]:
        for key in ("id", "started_at", "estimator_name", "level", "metrics"):
            if key not in s:
                raise ValueError(f"EMR session entry missing {key!r}")
    for factor in CLINICAL_FACTORS:
        if factor not in doc["trends"]:
            raise ValueError(f"EMR trends missing factor {factor!r}")
        trend = doc["trends"][factor]
        for key in ("metric_name", "points", "slope", "n"):
            if key not in trend:
                raise ValueError(f"EMR trend {factor!r} missing {key!r}")
