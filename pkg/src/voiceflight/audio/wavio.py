"""Minimal RIFF/WAVE codec: 16-bit PCM and 32-bit float in, 16-bit PCM out."""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .types import SUPPORTED_SAMPLE_RATES, AudioClip

_FMT_PCM = 1
_FMT_IEEE_FLOAT = 3

INT16_SCALE = 32768.0


class WavFormatError(Exception):
    """The file is not a well-formed RIFF/WAVE container."""


class UnsupportedCodecError(Exception):
    """The file is valid WAVE but uses an encoding or rate we do not read."""


def read_wav(path: str | Path) -> AudioClip:
    """Read a WAV file into a normalized mono clip.

    16-bit PCM samples are scaled by 1/32768; 32-bit float samples are
    taken as-is (clamped to [-1, +1]). Stereo is downmixed by averaging.
    """
    path = Path(path)
    data = path.read_bytes()
    if len(data) < 12 or data[0:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise WavFormatError(f"{path}: not a RIFF/WAVE file")

    fmt = None
    payload = None
    pos = 12
    while pos + 8 <= len(data):
        chunk_id = data[pos : pos + 4]
        (chunk_size,) = struct.unpack_from("<I", data, pos + 4)
        body = data[pos + 8 : pos + 8 + chunk_size]
        if chunk_id == b"fmt ":
            if len(body) < 16:
                raise WavFormatError(f"{path}: truncated fmt chunk")
            fmt = struct.unpack_from("<HHIIHH", body, 0)
        elif chunk_id == b"data":
            if len(body) < chunk_size:
                raise WavFormatError(f"{path}: truncated data chunk")
            payload = body
        pos += 8 + chunk_size + (chunk_size & 1)  # chunks are word-aligned

    if fmt is None or payload is None:
        raise WavFormatError(f"{path}: missing fmt or data chunk")

    audio_format, channels, sample_rate, _, _, bits = fmt
    if channels not in (1, 2):
        raise UnsupportedCodecError(f"{path}: {channels} channels unsupported")
    if sample_rate not in SUPPORTED_SAMPLE_RATES:
        raise UnsupportedCodecError(f"{path}: sample rate {sample_rate} unsupported")

    if audio_format == _FMT_PCM and bits == 16:
        raw = np.frombuffer(payload[: len(payload) - len(payload) % 2], dtype="<i2")
        samples = raw.astype(np.float64) / INT16_SCALE
    elif audio_format == _FMT_IEEE_FLOAT and bits == 32:
        raw = np.frombuffer(payload[: len(payload) - len(payload) % 4], dtype="<f4")
        samples = np.clip(raw.astype(np.float64), -1.0, 1.0)
    else:
        raise UnsupportedCodecError(
            f"{path}: format {audio_format}/{bits}-bit unsupported"
        )

    if channels == 2:
        samples = samples[: samples.size - samples.size % 2]
        samples = samples.reshape(-1, 2).mean(axis=1)

    return AudioClip(samples=samples, sample_rate=sample_rate, source_label=str(path))


def write_wav(clip: AudioClip, path: str | Path) -> None:
    """Write a clip as 16-bit PCM mono little-endian RIFF/WAVE."""
    if clip.samples.size == 0:
        raise ValueError("refusing to persist an empty clip")
    path = Path(path)
    pcm = np.clip(np.rint(clip.samples * INT16_SCALE), -32768, 32767).astype("<i2")
    payload = pcm.tobytes()

    fmt_body = struct.pack(
        "<HHIIHH", _FMT_PCM, 1, clip.sample_rate, clip.sample_rate * 2, 2, 16
    )
    riff_size = 4 + (8 + len(fmt_body)) + (8 + len(payload))
    with open(path, "wb") as f:
        f.write(b"RIFF" + struct.pack("<I", riff_size) + b"WAVE")
        f.write(b"fmt " + struct.pack("<I", len(fmt_body)) + fmt_body)
        f.write(b"data" + struct.pack("<I", len(payload)) + payload)
