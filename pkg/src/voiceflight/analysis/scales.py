"""Frequency scale conversions: Hz <-> Mel, Hz -> MIDI note."""

from __future__ import annotations

import math

_NOTE_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")

A4_HZ = 440.0
A4_MIDI = 69


def hz_to_mel(f: float) -> float:
    """O'Shaughnessy mel scale: 2595 * log10(1 + f/700)."""
    if f < 0:
        raise ValueError(f"frequency must be non-negative, got {f}")
    return 2595.0 * math.log10(1.0 + f / 700.0)


def mel_to_hz(m: float) -> float:
    """Inverse mel scale: 700 * (10^(m/2595) - 1)."""
    if m < 0:
        raise ValueError(f"mel value must be non-negative, got {m}")
    return 700.0 * (10.0 ** (m / 2595.0) - 1.0)


def hz_to_midi(f: float) -> tuple[int, str, float]:
    """Map a frequency to (note number, note name, cents offset).

    Note number rounds half-up from 69 + 12*log2(f/440); the cents offset
    is the remainder in [-50, +50). Names use sharps, C4 = 60.
    """
    if f <= 0:
        raise ValueError(f"frequency must be positive, got {f}")
    raw = A4_MIDI + 12.0 * math.log2(f / A4_HZ)
    number = math.floor(raw + 0.5)
    cents = 100.0 * (raw - number)
    return number, midi_note_name(number), cents


def midi_note_name(number: int) -> str:
    """Scientific pitch notation with sharps (60 -> 'C4')."""
    octave = number // 12 - 1
    return f"{_NOTE_NAMES[number % 12]}{octave}"
