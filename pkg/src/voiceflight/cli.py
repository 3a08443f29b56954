"""Command-line front end: analyze, bench, simulate, serve."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .analysis.config import EstimatorConfig
from .analysis.estimators import ESTIMATORS
from .analysis.pipeline import analyze_all, smooth as smooth_track
from .audio.framing import default_window_hop, frame_stream
from .audio.wavio import read_wav
from .bench.corpus import generate_corpus
from .bench.metrics import builtin_bench_estimators, evaluate, rank
from .bench.report import REPORT_FORMATS, emit_report
from .game.engine import ControlSample, run_trace
from .game.level import LevelConfig, LevelValidationError
from .game.metrics import session_metrics

ANALYZE_HEADER = "time,f0_hz,pitch_mel,midi_note,midi_number,loudness_db,voiced"


@click.group()
def main():
    """Voice-training game engine tools."""


@main.command()
@click.argument("wav_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--estimator", type=click.Choice(sorted(ESTIMATORS)), default="yin")
@click.option("--smooth", "do_smooth", is_flag=True, help="median-filter the pitch track")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="write CSV here instead of stdout")
def analyze(wav_path: str, estimator: str, do_smooth: bool, out: str | None):
    """Per-frame pitch/loudness table for a WAV file."""
    cfg = EstimatorConfig()
    clip = read_wav(wav_path)
    window, hop = default_window_hop(clip.sample_rate)
    track = analyze_all(frame_stream(clip, window, hop), cfg, estimator)
    if do_smooth:
        track = smooth_track(track, cfg)

    lines = [ANALYZE_HEADER]
    for pf in track:
        if pf.voiced:
            f0 = f"{pf.f0_hz:.4f}"
            mel = f"{pf.pitch_mel:.4f}"
            note = pf.midi_note_name
            number = str(pf.midi_note_number)
        else:
            f0 = mel = note = number = ""
        lines.append(
            f"{pf.time:.6f},{f0},{mel},{note},{number},"
            f"{pf.loudness_db:.2f},{'true' if pf.voiced else 'false'}"
        )
    text = "\n".join(lines) + "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)


@main.command()
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--format", "fmt", type=click.Choice(REPORT_FORMATS), default="csv",
              show_default=True)
@click.option("--timing", is_flag=True,
              help="emit measured runtimes (report files are then not reproducible)")
def bench(seed: int, out: str, fmt: str, timing: bool):
    """Score and rank the built-in pitch estimators on the synthetic corpus."""
    cfg = EstimatorConfig()
    corpus = generate_corpus(seed)
    reports = [evaluate(e, corpus, cfg) for e in builtin_bench_estimators()]

    ordered = rank(reports)
    by_name = {r.estimator: r for r in reports}
    for i, name in enumerate(ordered, start=1):
        r = by_name[name]
        click.echo(
            f"{i}. {name}  gpe={r.gpe_rate:.4f}  fpe={r.fpe_cents:.2f}c  "
            f"voicing_err={r.voicing_miss + r.voicing_false_alarm:.4f}  "
            f"runtime={r.runtime_per_frame * 1e3:.3f}ms/frame"
        )

    # report files stay byte-reproducible for a given seed unless --timing
    emitted = reports if timing else [r.without_runtime() for r in reports]
    emit_report(emitted, fmt, out)
    click.echo(f"report written to {out}")


@main.command()
@click.argument("level_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("trace_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="write telemetry JSONL here")
def simulate(level_path: str, trace_path: str, out: str | None):
    """Run a control trace through the game deterministically; print the score."""
    try:
        level = LevelConfig.from_dict(json.loads(Path(level_path).read_text()))
    except LevelValidationError as e:
        raise click.ClickException(f"invalid level file: {e}")
    except (json.JSONDecodeError, TypeError) as e:
        raise click.ClickException(f"unreadable level file: {e}")

    try:
        trace = json.loads(Path(trace_path).read_text())
        dt = float(trace["dt"])
        samples = [ControlSample.from_dict(s) for s in trace["samples"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise click.ClickException(f"unreadable trace file: {e}")

    final, telemetry = run_trace(level, samples, dt)
    if out is not None:
        with open(out, "w", encoding="utf-8") as f:
            for t in telemetry:
                f.write(json.dumps(t.to_dict(), ensure_ascii=False) + "\n")

    metrics = session_metrics(telemetry, level)
    click.echo(f"status={final.status.value} score={final.score}")
    click.echo(json.dumps(metrics.to_dict()))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8506, show_default=True)
@click.option("--store", "store_root", envvar="VOICEFLIGHT_STORE",
              type=click.Path(file_okay=False), default="./voiceflight-data",
              show_default=True, help="store root (env: VOICEFLIGHT_STORE)")
@click.option("--estimator", type=click.Choice(sorted(ESTIMATORS)), default="yin",
              show_default=True)
@click.option("--ui-dir", type=click.Path(file_okay=False, exists=True), default=None,
              help="serve the built web UI from this directory at /ui")
def serve(host: str, port: int, store_root: str, estimator: str, ui_dir: str | None):
    """Run the local service (HTTP + live websocket)."""
    import uvicorn

    from .service.app import create_app

    app = create_app(store_root, estimator=estimator, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    sys.exit(main())
