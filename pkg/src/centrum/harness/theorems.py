"""Theorem registry: each case evaluates one claim on one corpus ring.

A case returns an Outcome (pass, vacuous or VIOLATION with a detail string)
or None when the ring is outside the claim's scope (e.g. T18 only speaks
about trivial extensions). Bounded conclusions pass unless they fail.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from centrum.constructions.builders import RingBuilder, corner, quotient
from centrum.constructions.expr import RingExpr, render
from centrum.core.config import Settings
from centrum.core.errors import UnknownTheoremError
from centrum.core.models import (
    CaseResult,
    PolyPropertyId,
    PropertyId,
    Tier,
    Verdict,
    VerdictStatus,
)
from centrum.polys import (
    check_poly_property,
    nilpotent_poly_coefficients,
    nilpotent_polys_coeffs_central,
)
from centrum.properties import check_property
from centrum.radicals import RadicalReport, radical_report
from centrum.ring import FiniteRing, Subset, all_two_sided_ideals

P = PropertyId
PP = PolyPropertyId


# ---------------------------------------------------------------------------
# Facts and outcomes
# ---------------------------------------------------------------------------

class Fact(NamedTuple):
    label: str
    value: bool
    note: str
    definite: bool = True


class Outcome(NamedTuple):
    result: CaseResult
    detail: str


def _verdict_fact(label: str, v: Verdict) -> Fact:
    note = f"{label}={v.result_label}"
    if v.witness:
        note += f" at {v.witness_text()}"
    return Fact(label, v.favorable, note, v.status != VerdictStatus.NO_COUNTEREXAMPLE)


def both(*facts: Fact) -> Fact:
    label = " and ".join(f.label for f in facts)
    return Fact(
        label,
        all(f.value for f in facts),
        "; ".join(f.note for f in facts),
        all(f.definite for f in facts),
    )


def implies(hyps: Sequence[Fact], conclusion: Callable[[], Fact]) -> Outcome:
    for h in hyps:
        if not h.value:
            return Outcome(CaseResult.VACUOUS, f"hypothesis false: {h.note}")
    c = conclusion()
    detail = "; ".join([h.note for h in hyps] + [c.note])
    return Outcome(CaseResult.PASS if c.value else CaseResult.VIOLATION, detail)


def equivalent(lhs: Fact, rhs: Fact, bound: int | None = None) -> Outcome:
    detail = f"{lhs.note}; {rhs.note}"
    if lhs.value == rhs.value:
        return Outcome(CaseResult.PASS, detail)
    if not (lhs.definite and rhs.definite):
        return Outcome(CaseResult.VACUOUS, f"{detail}; inconclusive up to {bound}")
    return Outcome(CaseResult.VIOLATION, detail)


def combine(*outcomes: Outcome) -> Outcome:
    results = {o.result for o in outcomes}
    detail = " | ".join(o.detail for o in outcomes)
    if CaseResult.VIOLATION in results:
        return Outcome(CaseResult.VIOLATION, detail)
    if CaseResult.PASS in results:
        return Outcome(CaseResult.PASS, detail)
    return Outcome(CaseResult.VACUOUS, detail)


def _holds(ok: bool, note: str) -> Outcome:
    return Outcome(CaseResult.PASS if ok else CaseResult.VIOLATION, note)


# ---------------------------------------------------------------------------
# Per-ring fact cache
# ---------------------------------------------------------------------------

class RingFacts:
    """Lazily computed verdicts for one ring and the rings it is built from."""

    def __init__(
        self,
        name: str,
        expr: RingExpr,
        builder: RingBuilder,
        settings: Settings | None = None,
        ring: FiniteRing | None = None,
    ):
        self.name = name
        self.expr = expr
        self.builder = builder
        self.settings = settings or builder.settings
        self._ring = ring
        self._verdicts: dict[str, Verdict] = {}
        self._subs: dict[object, RingFacts] = {}

    @property
    def ring(self) -> FiniteRing:
        if self._ring is None:
            self._ring = self.builder.build(self.expr)
        return self._ring

    @property
    def order(self) -> int:
        return self.ring.order

    def verdict(self, p: PropertyId | str) -> Verdict:
        p = PropertyId(p)
        if p.value not in self._verdicts:
            self._verdicts[p.value] = check_property(self.ring, p)
        return self._verdicts[p.value]

    def poly_verdict(self, p: PolyPropertyId, d: int | None = None) -> Verdict:
        d = self.settings.degree_bound if d is None else d
        key = f"{p.value}@{d}"
        if key not in self._verdicts:
            self._verdicts[key] = check_poly_property(self.ring, p, d, self.settings)
        return self._verdicts[key]

    def fact(self, p: PropertyId) -> Fact:
        return _verdict_fact(p.value, self.verdict(p))

    def poly_fact(self, p: PolyPropertyId) -> Fact:
        return _verdict_fact(p.value, self.poly_verdict(p))

    def fails_fact(self, p: PolyPropertyId) -> Fact:
        v = self.poly_verdict(p)
        return Fact(f"{p.value} fails", v.status == VerdictStatus.FAILS,
                    _verdict_fact(p.value, v).note)

    @cached_property
    def radicals(self) -> RadicalReport:
        return radical_report(self.ring)

    def sub(self, expr: RingExpr) -> RingFacts:
        if expr not in self._subs:
            self._subs[expr] = RingFacts(render(expr), expr, self.builder, self.settings)
        return self._subs[expr]

    def derived(self, key: object, label: str, make: Callable[[], FiniteRing]) -> RingFacts:
        """Facts for a ring computed from this one (a quotient or a corner)."""
        if key not in self._subs:
            self._subs[key] = RingFacts(label, self.expr, self.builder, self.settings, make())
        return self._subs[key]

    def quotient(self, ideal: Subset) -> RingFacts:
        if len(ideal) == 1:
            return self
        return self.derived(("quot", ideal.bits), f"{self.name}/I",
                            lambda: quotient(self.ring, ideal, self.settings))

    def corner(self, e: int) -> RingFacts | None:
        """eR as facts; None for e = 0 (the zero ring)."""
        if e == self.ring.zero:
            return None
        if e == self.ring.one:
            return self
        return self.derived(("corner", e), f"{self.name}e",
                            lambda: corner(self.ring, e, self.settings))


def _corner_cr(f: RingFacts, e: int) -> bool:
    c = f.corner(e)
    return True if c is None else c.fact(P.CENTRAL_REDUCED).value


def _is_squarefree(k: int) -> bool:
    return all(k % (p * p) for p in range(2, int(k**0.5) + 1))


# ---------------------------------------------------------------------------
# Cases
# ---------------------------------------------------------------------------

def t1(f: RingFacts) -> Outcome:
    return combine(
        implies([f.fact(P.REDUCED)], lambda: f.fact(P.CENTRAL_REDUCED)),
        implies([f.fact(P.CENTRAL_REDUCED), f.fact(P.SEMIPRIME)], lambda: f.fact(P.REDUCED)),
    )


def t2(f: RingFacts) -> Outcome:
    return combine(*(
        implies([f.fact(P.CENTRAL_REDUCED), f.fact(p)], lambda: f.fact(P.REDUCED))
        for p in (P.RIGHT_PP, P.LEFT_PP, P.RIGHT_PQ_BAER, P.LEFT_PQ_BAER)
    ))


def t3(f: RingFacts) -> Outcome:
    def agree() -> Fact:
        facts = [f.fact(p) for p in (P.RIGHT_PP, P.LEFT_PP, P.RIGHT_PQ_BAER, P.LEFT_PQ_BAER)]
        return Fact("pp and pq-Baer agree", len({x.value for x in facts}) == 1,
                    "; ".join(x.note for x in facts))

    return implies([f.fact(P.CENTRAL_REDUCED)], agree)


def _nil_ideals(f: RingFacts) -> list[Subset]:
    R = f.ring
    if R.order > f.settings.ideal_enumeration_cap:
        prime = f.radicals.prime_radical
        return [prime] if len(prime) > 1 else []
    nil = f.radicals.nilpotents
    return [I for I in all_two_sided_ideals(R, f.settings) if len(I) > 1 and I.issubset(nil)]


def t4(f: RingFacts) -> Outcome:
    cr = f.fact(P.CENTRAL_REDUCED)
    if not cr.value:
        return Outcome(CaseResult.VACUOUS, f"hypothesis false: {cr.note}")
    ideals = _nil_ideals(f)
    if not ideals:
        return Outcome(CaseResult.VACUOUS, "no nonzero nil ideals")
    for I in ideals:
        q = f.quotient(I).fact(P.CENTRAL_REDUCED)
        if not q.value:
            return Outcome(CaseResult.VIOLATION, f"R/I with |I|={len(I)}: {q.note}")
    return Outcome(CaseResult.PASS, f"{len(ideals)} nil ideals, every R/I central reduced")


def t5(f: RingFacts) -> Outcome:
    return equivalent(f.fact(P.DOMAIN), both(f.fact(P.PRIME), f.fact(P.CENTRAL_REDUCED)))


def t6(f: RingFacts) -> Outcome:
    return implies([f.fact(P.CENTRAL_REDUCED)], lambda: f.fact(P.CENTRAL_SEMICOMMUTATIVE))


def t7(f: RingFacts) -> Outcome:
    return implies(
        [f.fact(P.PRIME), f.fact(P.CENTRAL_SEMICOMMUTATIVE)], lambda: f.fact(P.REDUCED)
    )


def t8(f: RingFacts) -> Outcome:
    prime = f.fact(P.PRIME)
    if not prime.value:
        return Outcome(CaseResult.VACUOUS, f"hypothesis false: {prime.note}")
    R = f.ring
    nil = R.nilpotent_mask.copy()
    nil[R.zero] = False
    witnesses = []
    for I in all_two_sided_ideals(R, f.settings):
        if len(I) == R.order or (I.mask() & nil).any():
            continue
        if f.quotient(I).fact(P.CENTRAL_REDUCED).value:
            witnesses.append(I)
    if not witnesses:
        return Outcome(CaseResult.VACUOUS, "no reduced ideal with central reduced quotient")
    reduced = f.fact(P.REDUCED)
    detail = f"{len(witnesses)} reduced ideals with central reduced quotient; {reduced.note}"
    return _holds(reduced.value, detail)


def t9(f: RingFacts) -> Outcome:
    return implies([f.fact(P.CENTRAL_REDUCED)], lambda: f.fact(P.WEAKLY_SEMICOMMUTATIVE))


def t10(f: RingFacts) -> Outcome:
    return combine(
        implies([f.fact(P.CENTRAL_REDUCED)], lambda: f.fact(P.TWO_PRIMAL)),
        implies([f.fact(P.SEMIPRIME), f.fact(P.TWO_PRIMAL)], lambda: f.fact(P.CENTRAL_REDUCED)),
    )


def t11(f: RingFacts) -> Outcome:
    R = f.ring
    prime = f.radicals.prime_radical
    in_center = bool(np.all(R.center_mask[prime.mask()]))
    top = f.quotient(prime).fact(P.CENTRAL_REDUCED)
    rhs = both(
        Fact("R/P(R) central reduced", top.value, f"R/P(R) {top.note}"),
        Fact("P(R) central", in_center, f"P(R) central={in_center}"),
    )
    return equivalent(f.fact(P.CENTRAL_REDUCED), rhs)


def t12(f: RingFacts) -> Outcome:
    return implies([f.fact(P.CENTRAL_REDUCED)], lambda: f.fact(P.ABELIAN))


def t13(f: RingFacts) -> Outcome:
    return implies([f.fact(P.CENTRAL_REDUCED)], lambda: f.fact(P.DIRECTLY_FINITE))


def t14(f: RingFacts) -> Outcome:
    return implies(
        [f.fact(P.CENTRAL_REDUCED), f.fact(P.NIL_CLEAN)], lambda: f.fact(P.COMMUTATIVE)
    )


def t15(f: RingFacts) -> Outcome:
    R = f.ring
    cr = f.fact(P.CENTRAL_REDUCED)
    abelian = f.fact(P.ABELIAN)
    idem = np.flatnonzero(R.idempotent_mask).tolist()

    def complement(e: int) -> int:
        return R.minus(R.one, e)

    split_all = abelian.value and all(
        _corner_cr(f, e) and _corner_cr(f, complement(e)) for e in idem
    )
    central_idem = [e for e in idem if R.center_mask[e]]
    split_some = next(
        (e for e in central_idem if _corner_cr(f, e) and _corner_cr(f, complement(e))), None
    )
    values = {cr.value, split_all, split_some is not None}
    detail = (
        f"{cr.note}; every eR,(1-e)R central reduced={split_all}; "
        f"some central e splits={split_some is not None}"
    )
    return _holds(len(values) == 1, detail)


def t16(f: RingFacts) -> Outcome:
    regular = f.fact(P.REGULAR)
    sr = f.fact(P.STRONGLY_REGULAR)
    sides = [both(regular, f.fact(p)) for p in (P.CENTRAL_REDUCED, P.REDUCED, P.ABELIAN)]
    agree = all(s.value == sr.value for s in sides)
    return _holds(agree, "; ".join([sr.note] + [s.note for s in sides]))


def t17(f: RingFacts) -> Outcome | None:
    if f.expr.ctor != "Dorroh" or not _is_squarefree(f.expr.args[1]):
        return None
    base = f.sub(f.expr.args[0])
    return equivalent(base.fact(P.CENTRAL_REDUCED), f.fact(P.CENTRAL_REDUCED))


def t18(f: RingFacts) -> Outcome | None:
    if f.expr.ctor != "Triv":
        return None
    base = f.sub(f.expr.args[0])
    return equivalent(base.fact(P.COMMUTATIVE), f.fact(P.CENTRAL_REDUCED))


def t19(f: RingFacts) -> Outcome | None:
    if f.expr.ctor != "Prod":
        return None
    a, b = (f.sub(x) for x in f.expr.args)
    return equivalent(
        f.fact(P.CENTRAL_REDUCED),
        both(a.fact(P.CENTRAL_REDUCED), b.fact(P.CENTRAL_REDUCED)),
    )


def t20(f: RingFacts) -> Outcome:
    return implies(
        [f.fact(P.CENTRAL_REDUCED)],
        lambda: both(
            f.poly_fact(PP.NIL_ARMENDARIZ),
            f.poly_fact(PP.WEAK_ARMENDARIZ),
            f.poly_fact(PP.CENTRAL_ARMENDARIZ),
        ),
    )


def t21(f: RingFacts) -> Outcome | None:
    if f.expr.ctor != "PolyNil":
        return None
    base = f.sub(f.expr.args[0])
    pp = base.fact(P.RIGHT_PP)
    if not pp.value:
        return Outcome(CaseResult.VACUOUS, f"hypothesis false: base {pp.note}")
    return equivalent(
        base.fact(P.CENTRAL_REDUCED),
        f.poly_fact(PP.CENTRAL_ARMENDARIZ),
        f.settings.degree_bound,
    )


def t22(f: RingFacts) -> Outcome:
    cr = f.fact(P.CENTRAL_REDUCED)
    if not cr.value:
        return Outcome(CaseResult.VACUOUS, f"hypothesis false: {cr.note}")
    facts = [_verdict_fact(
        "coefficients central", nilpotent_polys_coeffs_central(f.ring, None, f.settings)
    )]
    if f.order <= 8:
        facts.append(_verdict_fact(
            "coefficients nilpotent", nilpotent_poly_coefficients(f.ring, 1, f.settings)
        ))
    c = both(*facts)
    return _holds(c.value, c.note)


def t23(f: RingFacts) -> Outcome | None:
    if f.expr.ctor != "Triv":
        return None
    base = f.sub(f.expr.args[0])
    return implies([base.fact(P.CENTRAL_REDUCED)], lambda: f.poly_fact(PP.CENTRAL_ARMENDARIZ))


def t24(f: RingFacts) -> Outcome | None:
    if f.expr.ctor != "PolyNil":
        return None
    base = f.sub(f.expr.args[0])
    return implies([base.fact(P.CENTRAL_REDUCED)], lambda: f.poly_fact(PP.NIL_ARMENDARIZ))


def t25(f: RingFacts) -> Outcome:
    """Central nilpotents: sums are nilpotent, products with anything are nilpotent,
    and aba central nilpotent makes ab and ba nilpotent."""
    R = f.ring
    nil = R.nilpotent_mask
    cn = R.center_mask & nil
    idx = np.flatnonzero(cn)
    sums_ok = nil[R.add[np.ix_(idx, idx)]]
    if not sums_ok.all():
        i, j = np.argwhere(~sums_ok)[0]
        a, b = int(idx[i]), int(idx[j])
        return Outcome(CaseResult.VIOLATION, f"sum of {R.name(a)} and {R.name(b)} not nilpotent")
    both_nil = nil[R.mul] & nil[R.mul.T]  # [a, b]: ab and ba nilpotent
    bad = cn[None, :] & ~both_nil
    if bad.any():
        a, b = (int(x) for x in np.argwhere(bad)[0])
        return Outcome(CaseResult.VIOLATION, f"b={R.name(b)} central nilpotent, a={R.name(a)}")
    bad = cn[R.aba] & ~both_nil
    if bad.any():
        a, b = (int(x) for x in np.argwhere(bad)[0])
        return Outcome(CaseResult.VIOLATION, f"aba central nilpotent at ({R.name(a)},{R.name(b)})")
    return Outcome(CaseResult.PASS, f"{idx.size} central nilpotents, all pairs checked")


def t26(f: RingFacts) -> Outcome | None:
    if f.expr.ctor not in ("Mat", "UT") or f.expr.args[0] < 2:
        return None
    cr = f.fact(P.CENTRAL_REDUCED)
    return _holds(not cr.value, cr.note)


def t27(f: RingFacts) -> Outcome:
    return implies([f.fact(P.UNIT_CENTRAL)], lambda: f.fact(P.CENTRAL_REDUCED))


def t28(f: RingFacts) -> Outcome:
    return combine(
        implies(
            [f.fact(P.REDUCED)],
            lambda: both(f.fact(P.RIGHT_NONSINGULAR), f.fact(P.LEFT_NONSINGULAR)),
        ),
        implies([f.fact(P.COMMUTATIVE), f.fact(P.RIGHT_NONSINGULAR)], lambda: f.fact(P.REDUCED)),
    )


def t29(f: RingFacts) -> Outcome:
    return implies([f.fact(P.REDUCED)], lambda: f.poly_fact(PP.ARMENDARIZ))


def t30(f: RingFacts) -> Outcome | None:
    if f.expr.ctor != "PolyNil":
        return None
    base = f.sub(f.expr.args[0])
    return equivalent(
        base.fact(P.REDUCED), f.poly_fact(PP.ARMENDARIZ), f.settings.degree_bound
    )


def t31(f: RingFacts) -> Outcome:
    return implies(
        [f.fails_fact(PP.WEAK_ARMENDARIZ)], lambda: f.fails_fact(PP.NIL_ARMENDARIZ)
    )


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TheoremCase:
    id: str
    statement: str
    check: Callable[[RingFacts], Outcome | None]
    tier: Tier = Tier.STANDARD
    cap: str | None = None  # Settings field bounding the ring order

    @property
    def number(self) -> int:
        return int(self.id[1:])

    def cap_value(self, settings: Settings) -> int | None:
        return getattr(settings, self.cap) if self.cap else None


_POLY_CAP = "poly_theorem_max_order"
_IDEAL_CAP = "ideal_enumeration_cap"

THEOREMS: dict[str, TheoremCase] = {
    c.id: c
    for c in [
        TheoremCase("T1", "reduced => central reduced; central reduced + semiprime => reduced", t1),
        TheoremCase("T2", "central reduced + pp or pq-Baer (either side) => reduced", t2),
        TheoremCase("T3", "over central reduced rings the four pp / pq-Baer conditions agree", t3),
        TheoremCase("T4", "central reduced R, nil ideal I => R/I central reduced", t4),
        TheoremCase("T5", "domain <=> prime and central reduced", t5),
        TheoremCase("T6", "central reduced => central semicommutative", t6),
        TheoremCase("T7", "prime + central semicommutative => reduced", t7),
        TheoremCase("T8", "prime R, reduced ideal I, R/I central reduced => R reduced", t8,
                    cap=_IDEAL_CAP),
        TheoremCase("T9", "central reduced => weakly semicommutative", t9),
        TheoremCase("T10", "central reduced => 2-primal; semiprime + 2-primal => central reduced",
                    t10),
        TheoremCase("T11", "central reduced <=> R/P(R) central reduced and P(R) central", t11),
        TheoremCase("T12", "central reduced => abelian", t12),
        TheoremCase("T13", "central reduced => directly finite", t13),
        TheoremCase("T14", "central reduced + nil clean => commutative", t14),
        TheoremCase("T15", "central reduced <=> corners eR, (1-e)R central reduced", t15),
        TheoremCase("T16", "strongly regular <=> regular + central reduced / reduced / abelian",
                    t16),
        TheoremCase("T17", "R central reduced <=> Dorroh(R, k) central reduced (squarefree k)",
                    t17),
        TheoremCase("T18", "R commutative <=> T(R,R) central reduced", t18),
        TheoremCase("T19", "A x B central reduced <=> A and B central reduced", t19),
        TheoremCase("T20", "central reduced => nil-, weak and central Armendariz", t20,
                    Tier.BOUNDED, _POLY_CAP),
        TheoremCase("T21", "right pp R: central reduced <=> R[x]/(x^n) central Armendariz", t21,
                    Tier.BOUNDED, _POLY_CAP),
        TheoremCase("T22", "central reduced => nilpotent polynomials have central coefficients",
                    t22, Tier.BOUNDED, _POLY_CAP),
        TheoremCase("T23", "R central reduced => T(R,R) central Armendariz", t23,
                    Tier.BOUNDED, _POLY_CAP),
        TheoremCase("T24", "R central reduced => R[x]/(x^n) nil-Armendariz", t24,
                    Tier.BOUNDED, _POLY_CAP),
        TheoremCase("T25", "central nilpotent element lemma", t25),
        TheoremCase("T26", "full and triangular matrix rings (n >= 2) are not central reduced",
                    t26),
        TheoremCase("T27", "unit-central => central reduced", t27),
        TheoremCase("T28", "reduced => nonsingular; commutative + nonsingular => reduced", t28),
        TheoremCase("T29", "reduced => Armendariz", t29, Tier.BOUNDED, _POLY_CAP),
        TheoremCase("T30", "R reduced <=> R[x]/(x^n) Armendariz", t30, Tier.BOUNDED, _POLY_CAP),
        TheoremCase("T31", "nil-Armendariz => weak Armendariz", t31, Tier.BOUNDED, _POLY_CAP),
    ]
}


def get_theorem(tid: str) -> TheoremCase:
    try:
        return THEOREMS[tid]
    except KeyError:
        raise UnknownTheoremError(
            f"unknown theorem {tid!r}; registered: {', '.join(THEOREMS)}"
        ) from None
