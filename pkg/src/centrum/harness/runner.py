"""Runs the theorem registry over the corpus and assembles a SuiteReport."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat

from centrum.constructions.builders import RingBuilder
from centrum.core.config import Settings
from centrum.core.models import CaseResult, CaseRow, SuiteReport, Tier, VerdictStatus
from centrum.harness.corpus import CorpusEntry, corpus_default
from centrum.harness.theorems import THEOREMS, RingFacts, TheoremCase, get_theorem
from centrum.properties import recheck

logger = logging.getLogger(__name__)

DORROH_FOOTNOTE = (
    "T17 is checked only for squarefree k; for other k the integer part of the "
    "extension carries nilpotents of its own"
)
EXPECTED_CASE = "expected"


def _row_key(row: CaseRow) -> tuple[int, str]:
    rank = 0 if row.case == EXPECTED_CASE else int(row.case[1:])
    return rank, row.ring


# ---------------------------------------------------------------------------
# Per-entry evaluation
# ---------------------------------------------------------------------------

def _expected_rows(facts: RingFacts, entry: CorpusEntry) -> list[CaseRow]:
    rows = []
    for exp in entry.expected:
        verdict = facts.verdict(exp.property_id)
        detail = f"{exp.property_id}={verdict.result_label} (expected {exp.status.value})"
        ok = verdict.status == exp.status
        if ok and verdict.status == VerdictStatus.FAILS and not recheck(facts.ring, verdict):
            ok = False
            detail += f"; witness {verdict.witness_text()} did not re-verify"
        rows.append(CaseRow(
            case=EXPECTED_CASE,
            ring=entry.name,
            result=CaseResult.PASS if ok else CaseResult.VIOLATION,
            detail=detail,
        ))
    return rows


def evaluate_entry(
    entry: CorpusEntry, theorem_ids: Sequence[str], settings: Settings
) -> list[CaseRow]:
    """Every row one corpus ring contributes: its expected verdicts, then each theorem."""
    facts = RingFacts(entry.name, entry.tree, RingBuilder(settings), settings)
    rows = _expected_rows(facts, entry)
    for tid in theorem_ids:
        case = THEOREMS[tid]
        cap = case.cap_value(settings)
        if cap is not None and facts.order > cap:
            logger.debug("%s skipped on %s (order %d > %d)", tid, entry.name, facts.order, cap)
            continue
        outcome = case.check(facts)
        if outcome is None:
            continue
        rows.append(CaseRow(case=tid, ring=entry.name, result=outcome.result,
                            detail=outcome.detail))
    logger.info("Evaluated %s: %d rows", entry.name, len(rows))
    return rows


# ---------------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------------

class TheoremSuite:
    """Checks registered theorems against a corpus of rings.

    Rows are sorted by theorem then ring name, so reports are identical
    across runs and worker counts.
    """

    def __init__(
        self,
        settings: Settings | None = None,
        corpus: list[CorpusEntry] | None = None,
    ):
        self.settings = settings or Settings()
        self.corpus = corpus_default() if corpus is None else corpus

    def entries(self, tier: str | Tier = "standard") -> list[CorpusEntry]:
        tier = str(getattr(tier, "value", tier))
        if tier == "all":
            return list(self.corpus)
        if tier == Tier.SLOW.value:
            return [e for e in self.corpus if e.tier == Tier.SLOW]
        return [e for e in self.corpus if e.tier == Tier.STANDARD]

    def cases(self, only: Iterable[str] | None = None) -> list[str]:
        if only:
            return [get_theorem(t).id for t in only]
        return list(THEOREMS)

    def _evaluate(self, entries: list[CorpusEntry], ids: list[str]) -> list[CaseRow]:
        workers = self.settings.workers
        if workers > 1 and len(entries) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                chunks = pool.map(evaluate_entry, entries, repeat(ids), repeat(self.settings))
                return [row for chunk in chunks for row in chunk]
        return [row for e in entries for row in evaluate_entry(e, ids, self.settings)]

    def run_theorem(self, tid: str, tier: str | Tier = "standard") -> list[CaseRow]:
        case: TheoremCase = get_theorem(tid)
        rows = self._evaluate(self.entries(tier), [case.id])
        return sorted((r for r in rows if r.case == case.id), key=_row_key)

    def run_all(
        self, tier: str | Tier = "standard", only: Iterable[str] | None = None
    ) -> SuiteReport:
        ids = self.cases(only)
        entries = self.entries(tier)
        report = SuiteReport()
        if not entries:
            message = f"corpus has no entries for tier {getattr(tier, 'value', tier)}"
            logger.warning(message)
            report.warnings.append(message)
            return report

        rows = sorted(self._evaluate(entries, ids), key=_row_key)
        report.rows = rows
        report.passed = sum(r.result == CaseResult.PASS for r in rows)
        report.vacuous = sum(r.result == CaseResult.VACUOUS for r in rows)
        report.violations = sum(r.result == CaseResult.VIOLATION for r in rows)

        decided = {r.case for r in rows if r.result != CaseResult.VACUOUS}
        report.fully_vacuous = [t for t in ids if t not in decided]
        if report.fully_vacuous:
            logger.warning("No corpus ring exercised: %s", ", ".join(report.fully_vacuous))
        if "T17" in ids:
            report.footnotes.append(DORROH_FOOTNOTE)
        for r in rows:
            if r.result == CaseResult.VIOLATION:
                logger.error("%s violated on %s: %s", r.case, r.ring, r.detail)
        return report
