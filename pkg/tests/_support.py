"""Shared fixture builders for the test suite."""

from __future__ import annotations

import math

import numpy as np

from voiceflight.audio import AudioClip, AudioFrame, ToneSpec, frame_stream, synth_tone
from voiceflight.game import ControlSample, LevelConfig


def make_tone(
    f0: float,
    duration: float = 1.0,
    amplitude: float = 0.8,
    snr_db: float = math.inf,
    harmonics: int = 1,
    noise_seed: int = 0,
    rate: int = 44100,
) -> AudioClip:
    spec = ToneSpec(
        f0_trajectory=((0.0, f0), (duration, f0)),
        amplitude=amplitude,
        duration=duration,
        snr_db=snr_db,
        harmonics=harmonics,
        noise_seed=noise_seed,
    )
    return synth_tone(spec, rate)


def interior_frames(clip: AudioClip, window: int = 2048, hop: int = 512, margin_s: float = 0.05):
    """Frames fully inside [margin, duration - margin]."""
    frames = frame_stream(clip, window, hop)
    dur = clip.samples.size / clip.sample_rate
    return [
        f
        for f in frames
        if f.start_time >= margin_s and f.start_time + window / clip.sample_rate <= dur - margin_s
    ]


def noise_frame(rng: np.random.Generator, rms: float = 0.2, n: int = 2048, rate: int = 44100) -> AudioFrame:
    return AudioFrame(
        samples=np.clip(rng.normal(0.0, rms, n), -1.0, 1.0), sample_rate=rate
    )


def golden_metrics_trace() -> tuple[LevelConfig, list[ControlSample], float]:
    """10 s trace, voiced 1.2-4.2 s with a 180->260 Mel ramp, dt 0.1."""
    level = LevelConfig(rng_seed=7, session_duration_s=10.0)
    samples = []
    for k in range(100):
        t = k * 0.1
        if 1.2 <= t < 4.2:
            mel = 180.0 + 80.0 * (k - 12) / 29.0
            samples.append(ControlSample(voiced=True, pitch_mel=mel))
        else:
            samples.append(ControlSample(voiced=False))
    return level, samples, 0.1


def random_level(rng: np.random.Generator) -> LevelConfig:
    return LevelConfig(
        sensitivity=float(rng.uniform(0.1, 0.5)),
        x_spread=float(rng.uniform(0.0, 0.3)),
        y_spread=float(rng.uniform(0.2, 1.0)),
        incoming_speed=float(rng.uniform(0.1, 0.5)),
        voice_maintenance_ms=float(rng.choice([0.0, 100.0, 200.0])),
        session_duration_s=float(rng.uniform(2.0, 5.0)),
        pitch_threshold_mel=200.0,
        spawn_interval_s=float(rng.uniform(0.5, 2.0)),
        rng_seed=int(rng.integers(0, 2**32)),
    )


def stream_clip_live(client, session_id: str, clip: AudioClip, chunk: int = 4410):
    """Send a clip through the live websocket in chunks; collect messages
    until session_end (or an error close). Returns the message list."""
    from voiceflight.service import pack_wire_frame

    messages = []
    with client.websocket_connect(f"/live/{session_id}") as ws:
        i = 0
        while i < clip.samples.size:
            part = clip.samples[i : i + chunk].astype(np.float32)
            ws.send_bytes(
                pack_wire_frame(clip.sample_rate, int(i * 1e6 / clip.sample_rate), part)
            )
            i += chunk
        while True:
            msg = ws.receive_json()
            messages.append(msg)
            if msg["kind"] in ("session_end", "error"):
                break
    return messages


def random_trace(rng: np.random.Generator, n_ticks: int) -> list[ControlSample]:
    samples = []
    for _ in range(n_ticks):
        if rng.random() < 0.6:
            samples.append(
                ControlSample(voiced=True, pitch_mel=float(rng.uniform(120.0, 320.0)))
            )
        else:
            samples.append(ControlSample(voiced=False))
    return samples
