from .framing import StreamFramer, default_window_hop, frame_stream
from .ring import FrameRing
from .synth import synth_tone
from .types import SUPPORTED_SAMPLE_RATES, AudioClip, AudioFrame, ToneSpec
from .wavio import UnsupportedCodecError, WavFormatError, read_wav, write_wav

__all__ = [
    "AudioClip",
    "AudioFrame",
    "ToneSpec",
    "SUPPORTED_SAMPLE_RATES",
    "FrameRing",
    "StreamFramer",
    "default_window_hop",
    "frame_stream",
    "read_wav",
    "write_wav",
    "synth_tone",
    "UnsupportedCodecError",
    "WavFormatError",
]
