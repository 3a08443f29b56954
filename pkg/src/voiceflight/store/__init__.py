from .models import SCHEMA_VERSION, Patient, TherapySession, TrendPoint, TrendSeries
from .store import CorruptStoreError, NotFoundError, SessionStore, validate_emr

__all__ = [
    "SessionStore",
    "Patient",
    "TherapySession",
    "TrendPoint",
    "TrendSeries",
    "SCHEMA_VERSION",
    "NotFoundError",
    "CorruptStoreError",
    "validate_emr",
]
