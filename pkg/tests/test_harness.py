"""Tests for the corpus, the theorem registry and the suite runner."""

from __future__ import annotations

import pytest
from pydantic import ValidationError

from centrum.constructions import RingBuilder, parse
from centrum.core.config import Settings
from centrum.core.errors import ExprSyntaxError, UnknownTheoremError
from centrum.core.models import CaseResult, ExpectedVerdict, Tier, VerdictStatus
from centrum.harness import (
    THEOREMS,
    CorpusEntry,
    RingFacts,
    TheoremSuite,
    corpus_default,
    evaluate_entry,
    get_theorem,
)
from centrum.harness.runner import DORROH_FOOTNOTE
from centrum.harness.theorems import Fact, combine, equivalent, implies
from centrum.ring import Subset

PASS = CaseResult.PASS
VACUOUS = CaseResult.VACUOUS
VIOLATION = CaseResult.VIOLATION


@pytest.fixture
def pick():
    """Corpus entries by name: pick("Z6", "Ex2.2")."""
    by_name = {e.name: e for e in corpus_default()}

    def _pick(*names: str) -> list[CorpusEntry]:
        return [by_name[n] for n in names]

    return _pick


def _facts(expr: str, settings: Settings | None = None) -> RingFacts:
    s = settings or Settings()
    return RingFacts(expr, parse(expr), RingBuilder(s), s)


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------


class TestCorpus:
    def test_names_unique(self):
        names = [e.name for e in corpus_default()]
        assert len(names) == len(set(names))

    def test_one_slow_entry(self):
        assert [e.name for e in corpus_default() if e.tier == Tier.SLOW] == ["Ex2.14"]

    def test_worked_examples_present(self):
        names = {e.name for e in corpus_default()}
        assert {"Ex2.2", "Ex2.9", "Ex2.11", "Ex2.18", "Ex2.23a", "Ex2.23b"} <= names

    def test_name_must_be_one_token(self):
        with pytest.raises(ValidationError):
            CorpusEntry(name="two words", expr="Z 2")

    def test_expression_must_parse(self):
        with pytest.raises((ValidationError, ExprSyntaxError)):
            CorpusEntry(name="bad", expr="Z")


# ---------------------------------------------------------------------------
# Combinators and facts
# ---------------------------------------------------------------------------


class TestOutcomeCombinators:
    def test_false_hypothesis_is_vacuous(self):
        out = implies([Fact("h", False, "h=fails")], lambda: Fact("c", False, "c"))
        assert out.result == VACUOUS

    def test_implication(self):
        assert implies([Fact("h", True, "h")], lambda: Fact("c", True, "c")).result == PASS
        assert implies([Fact("h", True, "h")], lambda: Fact("c", False, "c")).result == VIOLATION

    def test_equivalence(self):
        yes, no = Fact("a", True, "a"), Fact("b", False, "b")
        assert equivalent(yes, yes).result == PASS
        assert equivalent(yes, no).result == VIOLATION

    def test_bounded_disagreement_is_inconclusive(self):
        out = equivalent(Fact("a", False, "a"), Fact("b", True, "b", definite=False), 2)
        assert out.result == VACUOUS
        assert "inconclusive up to 2" in out.detail

    def test_combine(self):
        p = implies([Fact("h", True, "h")], lambda: Fact("c", True, "c"))
        v = implies([Fact("h", False, "h")], lambda: Fact("c", True, "c"))
        x = implies([Fact("h", True, "h")], lambda: Fact("c", False, "c"))
        assert combine(v, v).result == VACUOUS
        assert combine(v, p).result == PASS
        assert combine(p, x).result == VIOLATION


class TestRingFacts:
    def test_verdicts_cached(self):
        f = _facts("Z 4")
        assert f.verdict("reduced") is f.verdict("reduced")

    def test_zero_ideal_quotient_is_self(self):
        f = _facts("Z 4")
        assert f.quotient(Subset.from_indices(4, [0])) is f
        assert f.quotient(Subset.from_indices(4, [0, 2])).order == 2

    def test_corners(self):
        f = _facts("Z 6")
        assert f.corner(0) is None
        assert f.corner(1) is f
        assert f.corner(3).order == 2


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


class TestRegistry:
    def test_thirty_one_cases(self):
        assert list(THEOREMS) == [f"T{i}" for i in range(1, 32)]

    def test_unknown_theorem(self):
        with pytest.raises(UnknownTheoremError) as exc:
            get_theorem("T99")
        assert "T1" in str(exc.value)

    def test_polynomial_cases_are_capped(self):
        assert get_theorem("T20").tier == Tier.BOUNDED
        assert get_theorem("T20").cap_value(Settings(poly_theorem_max_order=8)) == 8
        assert get_theorem("T5").cap_value(Settings()) is None

    def test_trivial_extension_case(self):
        assert THEOREMS["T18"].check(_facts("Triv(UT(2, Z 2))")).result == PASS
        assert THEOREMS["T18"].check(_facts("Z 4")) is None

    def test_domain_case_on_field(self):
        out = THEOREMS["T5"].check(_facts("PolyMod(Z 2, [1,1])"))
        assert out.result == PASS

    def test_central_nilpotent_lemma(self):
        assert THEOREMS["T25"].check(_facts("Triv(Z 4)")).result == PASS

    def test_matrix_rings_not_central_reduced(self):
        assert THEOREMS["T26"].check(_facts("UT(3, Z 2)")).result == PASS


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


class TestSuite:
    def test_run_theorem_on_trivial_extensions(self, pick):
        suite = TheoremSuite(corpus=pick("Z2", "Triv(Z2)", "Triv(Z4)", "Triv(UT2)"))
        rows = suite.run_theorem("T18")
        assert [r.ring for r in rows] == ["Triv(UT2)", "Triv(Z2)", "Triv(Z4)"]
        assert all(r.result == PASS for r in rows)

    def test_dorroh_case_and_footnote(self, pick):
        suite = TheoremSuite(corpus=pick("Dorroh(Z2,6)", "Dorroh(UT2,2)"))
        report = suite.run_all(only=["T17"])
        assert report.ok
        assert report.passed == len(report.rows) == 4
        assert DORROH_FOOTNOTE in report.footnotes

    def test_expected_verdicts_checked(self):
        wrong = CorpusEntry(
            name="Z4wrong",
            expr="Z 4",
            expected=[
                ExpectedVerdict(property_id="reduced", status=VerdictStatus.HOLDS_EXHAUSTIVE)
            ],
        )
        report = TheoremSuite(corpus=[wrong]).run_all(only=["T12"])
        assert not report.ok
        assert report.rows[0].case == "expected"
        assert report.rows[0].result == VIOLATION

    def test_fully_vacuous_case_reported(self, pick):
        report = TheoremSuite(corpus=pick("Z2", "Z6")).run_all(only=["T18"])
        assert all(r.case == "expected" for r in report.rows)
        assert report.fully_vacuous == ["T18"]

    def test_empty_tier(self, pick):
        report = TheoremSuite(corpus=pick("Z2")).run_all(tier="slow")
        assert report.rows == []
        assert report.warnings

    def test_unknown_only(self, pick):
        with pytest.raises(UnknownTheoremError):
            TheoremSuite(corpus=pick("Z2")).run_all(only=["T0"])

    def test_rows_sorted_by_case_then_ring(self, pick):
        report = TheoremSuite(corpus=pick("Z6", "Ex2.2")).run_all(only=["T12", "T5"])
        keys = [(r.case, r.ring) for r in report.rows]
        assert keys[:3] == [("expected", "Ex2.2"), ("expected", "Ex2.2"), ("expected", "Z6")]
        assert keys[-4:] == [("T5", "Ex2.2"), ("T5", "Z6"), ("T12", "Ex2.2"), ("T12", "Z6")]

    def test_deterministic(self, pick):
        entries = pick("Z8", "Ex2.11", "Z6")
        first = TheoremSuite(corpus=entries).run_all()
        second = TheoremSuite(corpus=entries).run_all()
        assert first.model_dump() == second.model_dump()

    def test_worker_count_does_not_change_rows(self, pick):
        entries = pick("Z6", "Ex2.2", "Ex2.11")
        serial = TheoremSuite(Settings(workers=1), entries).run_all(only=["T1", "T10"])
        pooled = TheoremSuite(Settings(workers=2), entries).run_all(only=["T1", "T10"])
        assert serial.rows == pooled.rows

    def test_evaluate_entry_skips_capped_cases(self, pick):
        (entry,) = pick("Ex2.23b")
        rows = evaluate_entry(entry, ["T29"], Settings(poly_theorem_max_order=8))
        assert all(r.case == "expected" for r in rows)

    @pytest.mark.slow
    def test_standard_tier_has_no_violations(self):
        report = TheoremSuite().run_all("standard")
        assert report.violations == 0, [r for r in report.rows if r.result == VIOLATION]
        assert report.passed > 0
        exercised = {r.case for r in report.rows if r.result != VACUOUS} - {"expected"}
        assert len(exercised) >= 15, sorted(exercised)

    @pytest.mark.slow
    def test_slow_tier(self):
        report = TheoremSuite().run_all("slow", only=["T9", "T12"])
        assert report.ok
