"""Tiny splitmix64 generator: integer-only, so game runs are bit-identical
across platforms and the state is a single JSON-friendly int."""

from __future__ import annotations

_MASK = (1 << 64) - 1


def rng_seed_state(seed: int) -> int:
    return seed & _MASK


def rng_next(state: int) -> tuple[int, int]:
    """Advance once; returns (u64 value, new state)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    z = z ^ (z >> 31)
    return z, state


def rng_uniform(state: int, lo: float, hi: float) -> tuple[float, int]:
    value, state = rng_next(state)
    return lo + (hi - lo) * (value / 2.0**64), state
