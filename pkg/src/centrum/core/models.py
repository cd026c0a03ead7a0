"""Pydantic models and enums shared across the laboratory."""

from __future__ import annotations

import enum

from pydantic import BaseModel, Field, model_validator


# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------

class PropertyId(str, enum.Enum):
    COMMUTATIVE = "commutative"
    REDUCED = "reduced"
    CENTRAL_REDUCED = "central_reduced"
    ABELIAN = "abelian"
    UNIT_CENTRAL = "unit_central"
    DIRECTLY_FINITE = "directly_finite"
    NIL_CLEAN = "nil_clean"
    REGULAR = "regular"
    STRONGLY_REGULAR = "strongly_regular"
    DOMAIN = "domain"
    SEMICOMMUTATIVE = "semicommutative"
    CENTRAL_SEMICOMMUTATIVE = "central_semicommutative"
    WEAKLY_SEMICOMMUTATIVE = "weakly_semicommutative"
    PRIME = "prime"
    SEMIPRIME = "semiprime"
    TWO_PRIMAL = "two_primal"
    RIGHT_PP = "right_pp"
    LEFT_PP = "left_pp"
    RIGHT_PQ_BAER = "right_pq_baer"
    LEFT_PQ_BAER = "left_pq_baer"
    RIGHT_NONSINGULAR = "right_nonsingular"
    LEFT_NONSINGULAR = "left_nonsingular"


class PolyPropertyId(str, enum.Enum):
    ARMENDARIZ = "armendariz"
    CENTRAL_ARMENDARIZ = "central_armendariz"
    WEAK_ARMENDARIZ = "weak_armendariz"
    NIL_ARMENDARIZ = "nil_armendariz"
    LINEAR_ARMENDARIZ = "linear_armendariz"
    CENTRAL_LINEAR_ARMENDARIZ = "central_linear_armendariz"


class VerdictStatus(str, enum.Enum):
    HOLDS_EXHAUSTIVE = "holds_exhaustive"
    FAILS = "fails"
    NO_COUNTEREXAMPLE = "no_counterexample_up_to"


class Sidedness(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two_sided"


class Tier(str, enum.Enum):
    STANDARD = "standard"
    SLOW = "slow"
    BOUNDED = "bounded"


class CaseResult(str, enum.Enum):
    PASS = "pass"
    VACUOUS = "vacuous"
    VIOLATION = "VIOLATION"


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------

class WitnessItem(BaseModel):
    """One labelled element or polynomial of a counterexample."""

    role: str
    text: str
    index: int | None = None
    coeffs: list[int] | None = None


class Verdict(BaseModel):
    property_id: str
    status: VerdictStatus
    bound: int | None = None
    witness: list[WitnessItem] = Field(default_factory=list)

    @model_validator(mode="after")
    def _fails_carries_witness(self) -> Verdict:
        if self.status == VerdictStatus.FAILS and not self.witness:
            raise ValueError(f"fails verdict for {self.property_id} needs a witness")
        if self.status == VerdictStatus.NO_COUNTEREXAMPLE and self.bound is None:
            raise ValueError("no_counterexample_up_to needs a degree bound")
        return self

    @property
    def favorable(self) -> bool:
        return self.status != VerdictStatus.FAILS

    @property
    def result_label(self) -> str:
        if self.status == VerdictStatus.NO_COUNTEREXAMPLE:
            return f"{self.status.value}({self.bound})"
        return self.status.value

    def witness_text(self) -> str:
        if len(self.witness) == 1:
            return self.witness[0].text
        return "(" + ",".join(w.text for w in self.witness) + ")"

    def element(self, role: str) -> int:
        """Index of the witness element with the given role."""
        for w in self.witness:
            if w.role == role and w.index is not None:
                return w.index
        raise KeyError(role)


def holds(property_id: str) -> Verdict:
    return Verdict(property_id=property_id, status=VerdictStatus.HOLDS_EXHAUSTIVE)


def fails(property_id: str, witness: list[WitnessItem]) -> Verdict:
    return Verdict(property_id=property_id, status=VerdictStatus.FAILS, witness=witness)


# ---------------------------------------------------------------------------
# Harness records
# ---------------------------------------------------------------------------

class ExpectedVerdict(BaseModel):
    """A (property, status) pair a corpus entry must reproduce on every run."""

    property_id: str
    status: VerdictStatus


class CaseRow(BaseModel):
    case: str
    ring: str
    result: CaseResult
    detail: str = ""


class SuiteReport(BaseModel):
    rows: list[CaseRow] = Field(default_factory=list)
    passed: int = 0
    vacuous: int = 0
    violations: int = 0
    fully_vacuous: list[str] = Field(default_factory=list)
    footnotes: list[str] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violations == 0
