"""Binary audio frame layout for the live capture stream.

    magic        4 bytes  "VXA1"
    sample_rate  u32 LE
    sample_count u32 LE
    timestamp_us u64 LE
    samples      sample_count * f32 LE
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

WIRE_MAGIC = b"VXA1"
_HEADER = struct.Struct("<4sIIQ")


class WireProtocolError(ValueError):
    pass


@dataclass(frozen=True)
class WireAudioFrame:
    sample_rate: int
    timestamp_us: int
    samples: np.ndarray  # float32

    @property
    def sample_count(self) -> int:
        return self.samples.size


def pack_wire_frame(sample_rate: int, timestamp_us: int, samples) -> bytes:
    samples = np.asarray(samples, dtype="<f4")
    header = _HEADER.pack(WIRE_MAGIC, sample_rate, samples.size, timestamp_us)
    return header + samples.tobytes()


def parse_wire_frame(data: bytes) -> WireAudioFrame:
    if len(data) < _HEADER.size:
        raise WireProtocolError(f"frame too short: {len(data)} bytes")
    magic, rate, count, timestamp_us = _HEADER.unpack_from(data)
    if magic != WIRE_MAGIC:
        raise WireProtocolError(f"bad magic: {magic!r}")
    expected = _HEADER.size + count * 4
    if len(data) != expected:
        raise WireProtocolError(
            f"declared {count} samples ({expected} bytes) but got {len(data)} bytes"
        )
    samples = np.frombuffer(data, dtype="<f4", offset=_HEADER.size)
    return WireAudioFrame(sample_rate=rate, timestamp_us=timestamp_us, samples=samples)
