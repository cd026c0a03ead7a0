"""Tests for the machine-readable line format."""

from __future__ import annotations

import pytest

from centrum.core.models import (
    CaseResult,
    CaseRow,
    SuiteReport,
    Verdict,
    VerdictStatus,
    WitnessItem,
    fails,
    holds,
)
from centrum.reporting import (
    format_case,
    format_info,
    format_report,
    format_summary,
    format_verdict,
    parse_line,
)


class TestVerdictLines:
    def test_holds(self):
        line = format_verdict("Z 2", holds("reduced"))
        assert line == 'verdict reduced ring="Z 2" result=holds_exhaustive'

    def test_witness_round_trip(self):
        v = fails("central_reduced", [
            WitnessItem(role="a", text="[[0,2],[0,0]]", index=4),
            WitnessItem(role="b", text="[[1,0],[0,3]]", index=9),
        ])
        kind, fields = parse_line(format_verdict("CongMat(4)", v))
        assert kind == "verdict"
        assert fields == {
            "property": "central_reduced",
            "ring": "CongMat(4)",
            "result": "fails",
            "witness": "([[0,2],[0,0]],[[1,0],[0,3]])",
        }

    def test_bounded(self):
        v = Verdict(property_id="armendariz", status=VerdictStatus.NO_COUNTEREXAMPLE, bound=2)
        _, fields = parse_line(format_verdict("PolyNil(Z 2, 2)", v))
        assert fields["result"] == "no_counterexample_up_to(2)"
        assert fields["ring"] == "PolyNil(Z 2, 2)"


class TestCaseAndSummaryLines:
    def test_case_round_trip(self):
        row = CaseRow(
            case="T5", ring="Ex2.2", result=CaseResult.PASS, detail="hyp true; concl true"
        )
        kind, fields = parse_line(format_case(row))
        assert kind == "case"
        assert fields == {
            "case": "T5", "ring": "Ex2.2", "result": "pass", "detail": "hyp true; concl true",
        }

    def test_quotes_replaced(self):
        row = CaseRow(case="T1", ring="Z2", result=CaseResult.VACUOUS, detail='say "hi"')
        assert parse_line(format_case(row))[1]["detail"] == "say 'hi'"

    def test_summary_and_warnings(self):
        report = SuiteReport(
            passed=3, vacuous=1, violations=0,
            fully_vacuous=["T9"], warnings=["tier slow is empty"], footnotes=["squarefree k"],
        )
        lines = format_summary(report)
        assert parse_line(lines[0]) == (
            "summary", {"passed": "3", "vacuous": "1", "violations": "0"}
        )
        assert parse_line(lines[1]) == ("warning", {"fully_vacuous": "T9"})
        assert parse_line(lines[2]) == ("warning", {"message": "tier slow is empty"})
        assert parse_line(lines[3]) == ("footnote", {"text": "squarefree k"})

    def test_report_ends_with_newline(self):
        report = SuiteReport(rows=[CaseRow(case="T1", ring="Z2", result=CaseResult.PASS)])
        text = format_report(report)
        assert text.endswith("\n")
        assert [parse_line(ln)[0] for ln in text.splitlines()] == ["case", "summary"]


class TestInfoLines:
    def test_quoting(self):
        line = format_info(ring="Z 8", order=8, nilpotents="0 2 4 6", empty="")
        assert parse_line(line) == ("info", {
            "ring": "Z 8", "order": "8", "nilpotents": "0 2 4 6", "empty": "",
        })

    @pytest.mark.parametrize("line", ["hello world", "verdictless", "info", ""])
    def test_foreign_lines_rejected(self, line):
        with pytest.raises(ValueError):
            parse_line(line)
