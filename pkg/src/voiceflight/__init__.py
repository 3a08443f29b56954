"""Voice-controlled rehabilitation game engine.

Pitch/loudness analysis of mono voice audio, a pluggable pitch-estimator
benchmark, a deterministic voice-controlled game simulation, a therapy
session store with trend analysis and EMR export, and a local service
plus CLI fronting all of it.
"""

__version__ = "0.1.0"
