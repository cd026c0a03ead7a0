"""The shipped corpus of named rings, each with verdicts it must reproduce."""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

from centrum.constructions.expr import RingExpr, parse
from centrum.core.models import ExpectedVerdict, Tier, VerdictStatus

HOLDS = VerdictStatus.HOLDS_EXHAUSTIVE
FAILS = VerdictStatus.FAILS


class CorpusEntry(BaseModel):
    name: str
    expr: str
    tier: Tier = Tier.STANDARD
    expected: list[ExpectedVerdict] = Field(default_factory=list)
    note: str = ""

    @field_validator("name")
    @classmethod
    def _no_spaces(cls, v: str) -> str:
        if not v or any(c.isspace() for c in v):
            raise ValueError(f"corpus names are single tokens, got {v!r}")
        return v

    @field_validator("expr")
    @classmethod
    def _parses(cls, v: str) -> str:
        parse(v)
        return v

    @property
    def tree(self) -> RingExpr:
        return parse(self.expr)


def _entry(name: str, expr: str, note: str = "", tier: Tier = Tier.STANDARD,
           **expected: VerdictStatus) -> CorpusEntry:
    return CorpusEntry(
        name=name,
        expr=expr,
        tier=tier,
        note=note,
        expected=[ExpectedVerdict(property_id=p, status=s) for p, s in expected.items()],
    )


def corpus_default() -> list[CorpusEntry]:
    return [
        _entry("Z2", "Z 2", "prime field", reduced=HOLDS, domain=HOLDS, right_pp=HOLDS),
        _entry("Z3", "Z 3", "prime field of odd characteristic", reduced=HOLDS),
        _entry("Ex2.23a", "Z 4", "central reduced but not nonsingular",
               central_reduced=HOLDS, right_nonsingular=FAILS),
        _entry("Z6", "Z 6", "reduced, not prime", prime=FAILS, reduced=HOLDS),
        _entry("Z8", "Z 8", reduced=FAILS, central_reduced=HOLDS),
        _entry("Z12", "Z 12", central_reduced=HOLDS),
        _entry("F4", "PolyMod(Z 2, [1,1])", "field with four elements",
               domain=HOLDS, strongly_regular=HOLDS),
        _entry("Ex2.23b", "Mat(2, Z 2)", "nonsingular, prime, not central reduced",
               right_nonsingular=HOLDS, left_nonsingular=HOLDS, central_reduced=FAILS,
               prime=HOLDS),
        _entry("Ex2.11", "UT(2, Z 2)", central_reduced=FAILS),
        _entry("Ex2.11/I", "Quot(UT(2, Z 2), [[[1,0],[0,0]]])",
               "quotient by the first-row ideal is central reduced", central_reduced=HOLDS),
        _entry("UT3", "UT(3, Z 2)", central_reduced=FAILS),
        _entry("Ex2.9", "EqDiagUT(3, Z 2)", "central semicommutative, not central reduced",
               central_semicommutative=HOLDS, central_reduced=FAILS),
        _entry("Ex2.14", "EqDiagUT(5, Z 2)", "weakly semicommutative, not central reduced",
               tier=Tier.SLOW, weakly_semicommutative=HOLDS, central_reduced=FAILS),
        _entry("Triv(Z2)", "Triv(Z 2)", central_reduced=HOLDS, reduced=FAILS),
        _entry("Triv(Z4)", "Triv(Z 4)", central_reduced=HOLDS),
        _entry("Triv(UT2)", "Triv(UT(2, Z 2))", central_reduced=FAILS, commutative=FAILS),
        _entry("Ex2.18", "CongMat(4)", "abelian, not central reduced (mod 8 analog)",
               abelian=HOLDS, central_reduced=FAILS),
        _entry("Dorroh(Z2,6)", "Dorroh(Z 2, 6)", central_reduced=HOLDS),
        _entry("Dorroh(UT2,2)", "Dorroh(UT(2, Z 2), 2)", central_reduced=FAILS),
        _entry("Ex2.2", "PolyNil(Z 2, 2)", "central reduced, not reduced",
               central_reduced=HOLDS, reduced=FAILS),
        _entry("PolyNil(Z4,2)", "PolyNil(Z 4, 2)", central_reduced=HOLDS, reduced=FAILS),
        _entry("PolyNil(Z2,3)", "PolyNil(Z 2, 3)", central_reduced=HOLDS),
        _entry("Prod(Z2,Mat2)", "Prod(Z 2, Mat(2, Z 2))", central_reduced=FAILS),
        _entry("GroupRing(Z2,C2)", "GroupRing(Z 2, [2])", central_reduced=HOLDS, reduced=FAILS),
        _entry("GroupRing(Z3,C3)", "GroupRing(Z 3, [3])", central_reduced=HOLDS, reduced=FAILS),
        _entry("Corner(Prod,e1)", "Corner(Prod(Z 2, Mat(2, Z 2)), (1,[[0,0],[0,0]]))",
               reduced=HOLDS),
        _entry("Corner(Prod,e2)", "Corner(Prod(Z 2, Mat(2, Z 2)), (0,[[1,0],[0,1]]))",
               central_reduced=FAILS),
    ]
