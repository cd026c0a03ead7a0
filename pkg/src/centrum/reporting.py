"""Machine-readable output lines and their parser.

    verdict <property> ring="<expr>" result=<status> [witness="<names>"]
    case=<Tn> ring=<name> result=pass|vacuous|VIOLATION detail="<text>"
    summary passed=<n> vacuous=<n> violations=<n>
    info <key>=<value> ...

Values containing spaces are double-quoted; no value ever contains a quote.
"""

from __future__ import annotations

import re

from centrum.core.models import CaseRow, SuiteReport, Verdict

_PAIR = re.compile(r'(\w+)=("([^"]*)"|\S+)')


def _quote(value: str) -> str:
    return f'"{value.replace(chr(34), chr(39))}"'


def format_verdict(ring: str, verdict: Verdict) -> str:
    line = f"verdict {verdict.property_id} ring={_quote(ring)} result={verdict.result_label}"
    if verdict.witness:
        line += f" witness={_quote(verdict.witness_text())}"
    return line


def format_case(row: CaseRow) -> str:
    return (
        f"case={row.case} ring={row.ring} result={row.result.value} detail={_quote(row.detail)}"
    )


def format_info(**fields: object) -> str:
    parts = []
    for key, value in fields.items():
        text = str(value)
        parts.append(f"{key}={_quote(text) if (' ' in text or not text) else text}")
    return "info " + " ".join(parts)


def format_summary(report: SuiteReport) -> list[str]:
    lines = [
        f"summary passed={report.passed} vacuous={report.vacuous} violations={report.violations}"
    ]
    if report.fully_vacuous:
        lines.append(f"warning fully_vacuous={','.join(report.fully_vacuous)}")
    lines += [f"warning message={_quote(w)}" for w in report.warnings]
    lines += [f"footnote text={_quote(f)}" for f in report.footnotes]
    return lines


def format_report(report: SuiteReport) -> str:
    return "\n".join([format_case(r) for r in report.rows] + format_summary(report)) + "\n"


def _fields(text: str) -> dict[str, str]:
    return {
        m.group(1): m.group(3) if m.group(3) is not None else m.group(2)
        for m in _PAIR.finditer(text)
    }


def parse_line(line: str) -> tuple[str, dict[str, str]]:
    """Split any emitted line into (kind, fields). Raises ValueError on foreign lines."""
    line = line.strip()
    if line.startswith("case="):
        return "case", _fields(line)
    kind, _, rest = line.partition(" ")
    if kind == "verdict":
        prop, _, rest = rest.partition(" ")
        return kind, {"property": prop, **_fields(rest)}
    fields = _fields(rest)
    if kind not in {"summary", "info", "warning", "footnote"} or not fields:
        raise ValueError(f"not a machine line: {line!r}")
    return kind, fields
