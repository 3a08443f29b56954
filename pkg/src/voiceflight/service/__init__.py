from .app import create_app
from .levels import LevelRecord, LevelStore
from .live import LivePipeline, state_summary
from .wire import (
    WIRE_MAGIC,
    WireAudioFrame,
    WireProtocolError,
    pack_wire_frame,
    parse_wire_frame,
)

__all__ = [
    "create_app",
    "LevelStore",
    "LevelRecord",
    "LivePipeline",
    "state_summary",
    "WIRE_MAGIC",
    "WireAudioFrame",
    "WireProtocolError",
    "pack_wire_frame",
    "parse_wire_frame",
]
