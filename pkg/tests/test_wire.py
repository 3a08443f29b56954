import struct

import numpy as np
import pytest

from voiceflight.service import (
    WIRE_MAGIC,
    WireProtocolError,
    pack_wire_frame,
    parse_wire_frame,
)


def test_round_trip():
    samples = np.array([0.5, -0.25, 0.0, 1.0], dtype=np.float32)
    data = pack_wire_frame(44100, 123456789, samples)
    frame = parse_wire_frame(data)
    assert frame.sample_rate == 44100
    assert frame.timestamp_us == 123456789
    assert frame.sample_count == 4
    assert np.array_equal(frame.samples, samples)


def test_golden_byte_layout():
    samples = np.array([1.0, -1.0], dtype="<f4")
    data = pack_wire_frame(16000, 7, samples)
    expected = (
        b"VXA1"
        + struct.pack("<I", 16000)
        + struct.pack("<I", 2)
        + struct.pack("<Q", 7)
        + samples.tobytes()
    )
    assert data == expected
    assert data[:4] == WIRE_MAGIC


def test_bad_magic_rejected():
    samples = np.zeros(2, dtype=np.float32)
    data = b"XXXX" + pack_wire_frame(44100, 0, samples)[4:]
    with pytest.raises(WireProtocolError):
        parse_wire_frame(data)


def test_count_payload_mismatch_rejected():
    data = pack_wire_frame(44100, 0, np.zeros(4, dtype=np.float32))
    with pytest.raises(WireProtocolError):
        parse_wire_frame(data + b"\x00\x00")
    with pytest.raises(WireProtocolError):
        parse_wire_frame(data[:-4])


def test_truncated_header_rejected():
    with pytest.raises(WireProtocolError):
        parse_wire_frame(b"VXA1\x00")
