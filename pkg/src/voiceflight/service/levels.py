"""Named level records persisted for the level editor."""

from __future__ import annotations

import json
import os
import uuid
from dataclasses import dataclass
from pathlib import Path

from ..game.level import LevelConfig


@dataclass(frozen=True)
class LevelRecord:
    id: str
    name: str
    config: LevelConfig

    def to_dict(self) -> dict:
        return {"id": self.id, "name": self.name, "config": self.config.to_dict()}

    @classmethod
    def from_dict(cls, d: dict) -> "LevelRecord":
        return cls(id=d["id"], name=d["name"], config=LevelConfig.from_dict(d["config"]))


class LevelStore:
    """levels.json in the store root; whole-file atomic rewrite on change
    (levels are few and editable, unlike the append-only session data)."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._path = self.root / "levels.json"

    def list(self) -> list[LevelRecord]:
        if not self._path.exists():
            return []
        data = json.loads(self._path.read_text(encoding="utf-8"))
        return [LevelRecord.from_dict(d) for d in data["levels"]]

    def get(self, level_id: str) -> LevelRecord:
        for rec in self.list():
            if rec.id == level_id:
                return rec
        raise KeyError(f"no such level: {level_id}")

    def create(self, name: str, config: LevelConfig) -> LevelRecord:
        rec = LevelRecord(id=f"lv-{uuid.uuid4().hex[:12]}", name=name, config=config)
        self._write(self.list() + [rec])
        return rec

    def update(self, level_id: str, name: str, config: LevelConfig) -> LevelRecord:
        records = self.list()
        for i, rec in enumerate(records):
            if rec.id == level_id:
                records[i] = LevelRecord(id=level_id, name=name, config=config)
                self._write(records)
                return records[i]
        raise KeyError(f"no such level: {level_id}")

    def _write(self, records: list[LevelRecord]) -> None:
        tmp = self._path.with_suffix(".json.tmp")
        tmp.write_text(
            json.dumps({"levels": [r.to_dict() for r in records]}, indent=2),
            encoding="utf-8",
        )
        os.replace(tmp, self._path)
