"""Single-producer/single-consumer frame buffer for live capture.

A live game must track the newest voice, so on overflow the oldest frame
is dropped (and counted) rather than blocking the producer.
"""

from __future__ import annotations

import threading
from collections import deque

from .types import AudioFrame


class FrameRing:
    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.capacity = capacity
        self._frames: deque[AudioFrame] = deque()
        self._lock = threading.Lock()
        self._dropped = 0
        self._pushed = 0
        self._popped = 0

    def push(self, frame: AudioFrame) -> None:
        with self._lock:
            self._pushed += 1
            if len(self._frames) == self.capacity:
                self._frames.popleft()
                self._dropped += 1
            self._frames.append(frame)

    def pop(self) -> AudioFrame | None:
        with self._lock:
            if not self._frames:
                return None
            self._popped += 1
            return self._frames.popleft()

    def __len__(self) -> int:
        with self._lock:
            return len(self._frames)

    @property
    def dropped(self) -> int:
        with self._lock:
            return self._dropped

    @property
    def pushed(self) -> int:
        with self._lock:
            return self._pushed

    @property
    def popped(self) -> int:
        with self._lock:
            return self._popped
