"""Benchmark report files: fixed-schema CSV and JSON, lossless round-trip."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from .metrics import BenchReport

CSV_HEADER = "estimator,gpe_rate,fpe_cents,voicing_false_alarm,voicing_miss,runtime_per_frame"

_COLUMNS = ("gpe_rate", "fpe_cents", "voicing_false_alarm", "voicing_miss", "runtime_per_frame")

REPORT_FORMATS = ("csv", "json")


def emit_report(reports: Sequence[BenchReport], format: str, path: str | Path) -> None:
    """Write reports one row per estimator; floats use repr so parsing the
    file back yields exactly the values written."""
    path = Path(path)
    if format == "csv":
        lines = [CSV_HEADER]
        for r in reports:
            lines.append(
                ",".join([r.estimator] + [repr(getattr(r, c)) for c in _COLUMNS])
            )
        path.write_text("\n".join(lines) + "\n")
    elif format == "json":
        rows = [
            {"estimator": r.estimator, **{c: getattr(r, c) for c in _COLUMNS}}
            for r in reports
        ]
        path.write_text(json.dumps(rows, indent=2) + "\n")
    else:
        raise ValueError(f"unknown report format {format!r}; choose from {REPORT_FORMATS}")


def parse_report(path: str | Path, format: str) -> list[BenchReport]:
    path = Path(path)
    if format == "csv":
        lines = path.read_text().splitlines()
        if not lines or lines[0] != CSV_HEADER:
            raise ValueError(f"{path}: unexpected CSV header")
        out = []
        for line in lines[1:]:
            name, *values = line.split(",")
            out.append(BenchReport(name, *(float(v) for v in values)))
        return out
    if format == "json":
        rows = json.loads(path.read_text())
        return [
            BenchReport(row["estimator"], *(row[c] for c in _COLUMNS)) for row in rows
        ]
    raise ValueError(f"unknown report format {format!r}; choose from {REPORT_FORMATS}")
