"""Counterexample search over rings generated from the construction grammar.

Candidates are built smallest first and filtered by the requested properties.
Matching rings are deduplicated by an isomorphism-invariant fingerprint and
re-verified on a fresh build before they are reported.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat

import numpy as np
from pydantic import BaseModel

from centrum.constructions.builders import RingBuilder
from centrum.constructions.expr import RingExpr, Z, parse, predicted_order, render
from centrum.core.config import Settings
from centrum.core.errors import BudgetExceededError, CentrumError, OrderCapError
from centrum.core.models import PolyPropertyId, PropertyId, Verdict, VerdictStatus
from centrum.polys import check_poly_property
from centrum.properties import check_property, recheck
from centrum.ring import FiniteRing

logger = logging.getLogger(__name__)

AnyProperty = PropertyId | PolyPropertyId

COMBINATOR_RANK = {
    c: i
    for i, c in enumerate([
        "Z", "PolyMod", "CongMat", "PolyNil", "Triv", "Mat", "UT", "EqDiagUT",
        "Dorroh", "GroupRing", "Prod",
    ])
}
DORROH_FACTORS = (2, 3, 4, 6)


class SearchHit(BaseModel):
    expr: str
    order: int


def resolve_property(name: str) -> AnyProperty:
    """Property enum for a CLI name; ValueError lists the known names."""
    for enum in (PropertyId, PolyPropertyId):
        try:
            return enum(name)
        except ValueError:
            continue
    known = [p.value for p in PropertyId] + [p.value for p in PolyPropertyId]
    raise ValueError(f"unknown property {name!r}; known: {', '.join(known)}")


# ---------------------------------------------------------------------------
# Fingerprint
# ---------------------------------------------------------------------------

def _additive_orders(R: FiniteRing) -> np.ndarray:
    n = R.order
    ar = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    acc = ar.copy()
    for k in range(1, n + 1):
        hit = (acc == R.zero) & (orders == 0)
        orders[hit] = k
        if orders.all():
            break
        acc = R.add[acc, ar]
    return orders


def _power_cycles(R: FiniteRing) -> tuple[np.ndarray, np.ndarray]:
    """Per element a, the least (s, t) with t >= 1 and a^s = a^(s+t)."""
    n = R.order
    ar = np.arange(n)
    top = ar.copy()
    for _ in range(n):  # a^(n+1) lies on the cycle
        top = R.mul[top, ar]
    period = np.zeros(n, dtype=np.int64)
    cur = top.copy()
    for t in range(1, n + 1):
        cur = R.mul[cur, ar]
        period[(cur == top) & (period == 0)] = t
        if period.all():
            break
    ahead = ar.copy()  # a^(1+period)
    for t in range(1, int(period.max()) + 1):
        step = period >= t
        ahead[step] = R.mul[ahead[step], ar[step]]
    preperiod = np.zeros(n, dtype=np.int64)
    u = ar.copy()
    for s in range(1, n + 2):
        preperiod[(u == ahead) & (preperiod == 0)] = s
        if preperiod.all():
            break
        u = R.mul[u, ar]
        ahead = R.mul[ahead, ar]
    return preperiod, period


def fingerprint(R: FiniteRing) -> tuple:
    """Order plus the sorted multiset of per-element isomorphism invariants."""
    preperiod, period = _power_cycles(R)
    rows = zip(
        _additive_orders(R).tolist(),
        preperiod.tolist(),
        period.tolist(),
        R.nilpotency_index.tolist(),
        R.center_mask.tolist(),
        strict=True,
    )
    return R.order, tuple(sorted(rows))


# ---------------------------------------------------------------------------
# Grammar
# ---------------------------------------------------------------------------

def default_atoms(max_order: int) -> list[RingExpr]:
    atoms = [Z(n) for n in range(2, max_order + 1)]
    if max_order >= 4:
        atoms.append(parse("PolyMod(Z 2, [1,1])"))
    k = 2
    while 2 * k**4 <= max_order:
        atoms.append(RingExpr("CongMat", (k,)))
        k += 1
    return atoms


def _unary(e: RingExpr) -> list[RingExpr]:
    return [
        RingExpr("Mat", (2, e)),
        RingExpr("UT", (2, e)),
        RingExpr("UT", (3, e)),
        RingExpr("EqDiagUT", (3, e)),
        RingExpr("Triv", (e,)),
        RingExpr("PolyNil", (e, 2)),
        RingExpr("PolyNil", (e, 3)),
        RingExpr("GroupRing", (e, (2,))),
        *(RingExpr("Dorroh", (e, k)) for k in DORROH_FACTORS),
    ]


def _fits(e: RingExpr, max_order: int) -> bool:
    order = predicted_order(e)
    return order is None or order <= max_order


def _sort_key(e: RingExpr) -> tuple[int, int, int, str]:
    rank = COMBINATOR_RANK.get(e.ctor, len(COMBINATOR_RANK))
    return predicted_order(e) or 0, e.depth, rank, render(e)


def enumerate_exprs(atoms: Sequence[RingExpr], max_order: int, depth: int) -> list[RingExpr]:
    """Expressions with at most ``depth`` combinator layers over the atoms, within the cap."""
    found = {a for a in atoms if _fits(a, max_order)}
    for _ in range(depth):
        current = sorted(found, key=render)
        layer = {u for e in current for u in _unary(e) if _fits(u, max_order)}
        for i, a in enumerate(current):
            for b in current[i:]:
                prod = RingExpr("Prod", (a, b))
                if _fits(prod, max_order):
                    layer.add(prod)
        if layer <= found:
            break
        found |= layer
    return sorted(found, key=_sort_key)


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def _verdict(R: FiniteRing, p: AnyProperty, settings: Settings) -> Verdict:
    if isinstance(p, PolyPropertyId):
        return check_poly_property(R, p, None, settings)
    return check_property(R, p)


def matches(
    R: FiniteRing,
    satisfy: Iterable[AnyProperty],
    violate: Iterable[AnyProperty],
    settings: Settings,
    verify: bool = False,
) -> bool:
    """True when every ``satisfy`` verdict is favorable and every ``violate`` verdict fails.

    With ``verify`` each failure witness is also re-checked against its formula.
    """
    try:
        for p in violate:
            v = _verdict(R, p, settings)
            if v.status != VerdictStatus.FAILS or (verify and not recheck(R, v)):
                return False
        return all(_verdict(R, p, settings).favorable for p in satisfy)
    except (BudgetExceededError, OrderCapError) as exc:
        logger.debug("skipping order %d ring: %s", R.order, exc)
        return False


def _check_candidate(
    expr: RingExpr,
    satisfy: Sequence[AnyProperty],
    violate: Sequence[AnyProperty],
    settings: Settings,
) -> bool:
    return matches(RingBuilder(settings).build(expr), satisfy, violate, settings)


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------

class CounterexampleSearch:
    """Hunts for rings separating two lists of properties."""

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or Settings()
        self.builder = RingBuilder(self.settings)

    def _build_all(
        self, exprs: list[RingExpr], max_order: int
    ) -> list[tuple[RingExpr, FiniteRing]]:
        built = []
        for e in exprs:
            try:
                R = self.builder.build(e)
            except CentrumError as exc:
                logger.debug("skipping %s: %s", render(e), exc)
                continue
            if R.order <= max_order:
                built.append((e, R))
        logger.info("%d grammar terms, %d built", len(exprs), len(built))
        return built

    def run(
        self,
        satisfy: Sequence[AnyProperty],
        violate: Sequence[AnyProperty],
        max_order: int,
        generators: Sequence[str] | None = None,
        depth: int | None = None,
    ) -> list[SearchHit]:
        if not satisfy and not violate:
            raise ValueError("search needs at least one --satisfy or --violate property")
        if max_order > self.settings.max_order:
            raise OrderCapError(
                f"search order {max_order} is above max_order {self.settings.max_order}"
            )
        depth = self.settings.search_max_depth if depth is None else depth
        atoms = [parse(g) for g in generators] if generators else default_atoms(max_order)
        exprs = enumerate_exprs(atoms, max_order, depth)
        if not exprs:
            logger.warning("search grammar is empty for max order %d", max_order)
            return []

        # every built ring is checked; fingerprints only collapse matching rings
        candidates = self._build_all(exprs, max_order)
        workers = self.settings.workers
        if workers > 1 and len(candidates) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                flags = list(pool.map(
                    _check_candidate, [e for e, _ in candidates],
                    repeat(list(satisfy)), repeat(list(violate)), repeat(self.settings),
                ))
        else:
            flags = [matches(R, satisfy, violate, self.settings) for _, R in candidates]

        seen: set[tuple] = set()
        hits = []
        for (e, R), flag in zip(candidates, flags, strict=True):
            if not flag:
                continue
            key = fingerprint(R)
            if key in seen:
                continue
            seen.add(key)
            fresh = RingBuilder(self.settings).build(e)
            if not matches(fresh, satisfy, violate, self.settings, verify=True):
                raise CentrumError(f"{render(e)} did not re-verify on a fresh build")
            hits.append(SearchHit(expr=render(e), order=R.order))
        logger.info("%d matching rings, %d up to fingerprint", sum(flags), len(hits))
        return sorted(hits, key=lambda h: (h.order, h.expr))
