"""Core modules: config, models, errors."""

from centrum.core.config import Settings
from centrum.core.models import (
    CaseResult,
    CaseRow,
    PolyPropertyId,
    PropertyId,
    SuiteReport,
    Verdict,
    VerdictStatus,
    WitnessItem,
)

__all__ = [
    "Settings",
    "PropertyId",
    "PolyPropertyId",
    "Verdict",
    "VerdictStatus",
    "WitnessItem",
    "CaseResult",
    "CaseRow",
    "SuiteReport",
]
