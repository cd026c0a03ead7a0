"""Exhaustive ring-property checks with witnesses.

Every check sweeps its defining formula over all elements and, on failure,
returns the first violating tuple. Relation checks sweep the right-hand factor
b outermost, so (a, b) witnesses are minimal in b first and then in a.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from centrum.core.models import (
    PolyPropertyId,
    PropertyId,
    Sidedness,
    Verdict,
    VerdictStatus,
    WitnessItem,
    fails,
    holds,
)
from centrum.polys import recheck_poly
from centrum.radicals import nilpotent_set, prime_radical, singular_ideal
from centrum.ring import (
    FiniteRing,
    Subset,
    is_essential_left_ideal,
    is_essential_right_ideal,
    is_nilpotent,
    left_annihilator,
    right_annihilator,
)

logger = logging.getLogger(__name__)


def _item(R: FiniteRing, role: str, a: int) -> WitnessItem:
    return WitnessItem(role=role, text=R.name(int(a)), index=int(a))


def _witness(R: FiniteRing, **roles: int) -> list[WitnessItem]:
    return [_item(R, role, a) for role, a in roles.items()]


def _first(mask: np.ndarray) -> int | None:
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


def _noncommuting_partner(R: FiniteRing, a: int) -> int:
    return int(np.flatnonzero(R.mul[a] != R.mul[:, a])[0])


# ---------------------------------------------------------------------------
# Element properties
# ---------------------------------------------------------------------------

def _commutative(R: FiniteRing) -> Verdict:
    a = _first(~R.center_mask)
    if a is None:
        return holds(PropertyId.COMMUTATIVE.value)
    return fails(PropertyId.COMMUTATIVE.value, _witness(R, a=a, b=_noncommuting_partner(R, a)))


def _reduced(R: FiniteRing) -> Verdict:
    mask = R.nilpotent_mask.copy()
    mask[R.zero] = False
    a = _first(mask)
    if a is None:
        return holds(PropertyId.REDUCED.value)
    return fails(PropertyId.REDUCED.value, _witness(R, a=a))


def _all_central(R: FiniteRing, pid: PropertyId, members: np.ndarray, role: str) -> Verdict:
    a = _first(members & ~R.center_mask)
    if a is None:
        return holds(pid.value)
    return fails(pid.value, _witness(R, **{role: a, "b": _noncommuting_partner(R, a)}))


def _central_reduced(R: FiniteRing) -> Verdict:
    return _all_central(R, PropertyId.CENTRAL_REDUCED, R.nilpotent_mask, "a")


def _abelian(R: FiniteRing) -> Verdict:
    return _all_central(R, PropertyId.ABELIAN, R.idempotent_mask, "e")


def _unit_central(R: FiniteRing) -> Verdict:
    return _all_central(R, PropertyId.UNIT_CENTRAL, R.unit_mask, "u")


def _directly_finite(R: FiniteRing) -> Verdict:
    right_inverse = R.mul == R.one
    bad = right_inverse & ~right_inverse.T
    if not bad.any():
        return holds(PropertyId.DIRECTLY_FINITE.value)
    a, b = (int(x) for x in np.argwhere(bad)[0])
    return fails(PropertyId.DIRECTLY_FINITE.value, _witness(R, a=a, b=b))


def _nil_clean(R: FiniteRing) -> Verdict:
    idem = np.flatnonzero(R.idempotent_mask)
    nil = np.flatnonzero(R.nilpotent_mask)
    covered = np.zeros(R.order, dtype=bool)
    covered[R.add[np.ix_(idem, nil)].ravel()] = True
    a = _first(~covered)
    if a is None:
        return holds(PropertyId.NIL_CLEAN.value)
    return fails(PropertyId.NIL_CLEAN.value, _witness(R, a=a))


def _regular(R: FiniteRing) -> Verdict:
    elems = np.arange(R.order)
    a = _first(~np.any(R.aba == elems[:, None], axis=1))
    if a is None:
        return holds(PropertyId.REGULAR.value)
    return fails(PropertyId.REGULAR.value, _witness(R, a=a))


def _strongly_regular(R: FiniteRing) -> Verdict:
    elems = np.arange(R.order)
    squares = np.diagonal(R.mul)
    a = _first(~np.any(R.mul[squares] == elems[:, None], axis=1))
    if a is None:
        return holds(PropertyId.STRONGLY_REGULAR.value)
    return fails(PropertyId.STRONGLY_REGULAR.value, _witness(R, a=a))


def _domain(R: FiniteRing) -> Verdict:
    nz = np.arange(R.order) != R.zero
    bad = (R.mul == R.zero) & nz[:, None] & nz[None, :]
    if not bad.any():
        return holds(PropertyId.DOMAIN.value)
    a, b = (int(x) for x in np.argwhere(bad)[0])
    return fails(PropertyId.DOMAIN.value, _witness(R, a=a, b=b))


# ---------------------------------------------------------------------------
# Relation properties
# ---------------------------------------------------------------------------

def _semicommutative_family(R: FiniteRing, pid: PropertyId, ok: np.ndarray) -> Verdict:
    """ab = 0 must force ok[arb] for every r; ok is a per-element acceptance mask."""
    for b in range(R.order):
        rows = np.flatnonzero(R.mul[:, b] == R.zero)
        if rows.size == 0:
            continue
        arb = R.mul[:, b][R.mul[rows]]  # arb[k, r] = (rows[k]·r)·b
        bad = ~ok[arb]
        if bad.any():
            k, r = (int(x) for x in np.argwhere(bad)[0])
            return fails(pid.value, _witness(R, a=int(rows[k]), r=r, b=b))
    return holds(pid.value)


def _semicommutative(R: FiniteRing) -> Verdict:
    ok = np.zeros(R.order, dtype=bool)
    ok[R.zero] = True
    return _semicommutative_family(R, PropertyId.SEMICOMMUTATIVE, ok)


def _central_semicommutative(R: FiniteRing) -> Verdict:
    return _semicommutative_family(R, PropertyId.CENTRAL_SEMICOMMUTATIVE, R.center_mask)


def _weakly_semicommutative(R: FiniteRing) -> Verdict:
    return _semicommutative_family(R, PropertyId.WEAKLY_SEMICOMMUTATIVE, R.nilpotent_mask)


def _prime(R: FiniteRing) -> Verdict:
    for b in range(R.order):
        if b == R.zero:
            continue
        arb = R.mul[:, b][R.mul]
        dead = np.all(arb == R.zero, axis=1)
        dead[R.zero] = False
        a = _first(dead)
        if a is not None:
            return fails(PropertyId.PRIME.value, _witness(R, a=a, b=b))
    return holds(PropertyId.PRIME.value)


def _semiprime(R: FiniteRing) -> Verdict:
    dead = np.all(R.aba == R.zero, axis=1)
    dead[R.zero] = False
    a = _first(dead)
    if a is None:
        return holds(PropertyId.SEMIPRIME.value)
    return fails(PropertyId.SEMIPRIME.value, _witness(R, a=a))


def _two_primal(R: FiniteRing) -> Verdict:
    gap = nilpotent_set(R).mask() & ~prime_radical(R).mask()
    a = _first(gap)
    if a is None:
        return holds(PropertyId.TWO_PRIMAL.value)
    return fails(PropertyId.TWO_PRIMAL.value, _witness(R, a=a))


# ---------------------------------------------------------------------------
# Annihilator properties
# ---------------------------------------------------------------------------

def _rows_as_keys(mask_rows: np.ndarray) -> list[bytes]:
    return [row.tobytes() for row in np.packbits(mask_rows, axis=1)]


def _generated_by_idempotent(
    R: FiniteRing, pid: PropertyId, ann: np.ndarray, principal: np.ndarray
) -> Verdict:
    """ann[a] must equal principal[e] (eR or Re) for some idempotent e."""
    allowed = set(_rows_as_keys(principal[R.idempotent_mask]))
    for a, key in enumerate(_rows_as_keys(ann)):
        if key not in allowed:
            return fails(pid.value, _witness(R, a=a))
    return holds(pid.value)


def _ideal_annihilators(principal: np.ndarray, zero_products: np.ndarray) -> np.ndarray:
    """ann[a, y] is True iff z·y = 0 (per zero_products[z, y]) for every z in principal[a]."""
    counts = principal.astype(np.float32) @ zero_products.astype(np.float32)
    return counts == principal.sum(axis=1, dtype=np.float32)[:, None]


def _right_pp(R: FiniteRing) -> Verdict:
    return _generated_by_idempotent(R, PropertyId.RIGHT_PP, R.mul == R.zero, R.right_principal)


def _left_pp(R: FiniteRing) -> Verdict:
    return _generated_by_idempotent(R, PropertyId.LEFT_PP, (R.mul == R.zero).T, R.left_principal)


def _right_pq_baer(R: FiniteRing) -> Verdict:
    ann = _ideal_annihilators(R.right_principal, R.mul == R.zero)
    return _generated_by_idempotent(R, PropertyId.RIGHT_PQ_BAER, ann, R.right_principal)


def _left_pq_baer(R: FiniteRing) -> Verdict:
    ann = _ideal_annihilators(R.left_principal, (R.mul == R.zero).T)
    return _generated_by_idempotent(R, PropertyId.LEFT_PQ_BAER, ann, R.left_principal)


def _nonsingular(R: FiniteRing, pid: PropertyId, side: Sidedness) -> Verdict:
    mask = singular_ideal(R, side).mask()
    mask[R.zero] = False
    a = _first(mask)
    if a is None:
        return holds(pid.value)
    return fails(pid.value, _witness(R, a=a))


def _right_nonsingular(R: FiniteRing) -> Verdict:
    return _nonsingular(R, PropertyId.RIGHT_NONSINGULAR, Sidedness.RIGHT)


def _left_nonsingular(R: FiniteRing) -> Verdict:
    return _nonsingular(R, PropertyId.LEFT_NONSINGULAR, Sidedness.LEFT)


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PropertyDef:
    formula: str
    check: Callable[[FiniteRing], Verdict]


PROPERTY_CATALOG: dict[PropertyId, PropertyDef] = {
    PropertyId.COMMUTATIVE: PropertyDef("ab = ba for all a, b", _commutative),
    PropertyId.REDUCED: PropertyDef("no nonzero nilpotent elements", _reduced),
    PropertyId.CENTRAL_REDUCED: PropertyDef("every nilpotent element is central", _central_reduced),
    PropertyId.ABELIAN: PropertyDef("every idempotent is central", _abelian),
    PropertyId.UNIT_CENTRAL: PropertyDef("every unit is central", _unit_central),
    PropertyId.DIRECTLY_FINITE: PropertyDef("ab = 1 implies ba = 1", _directly_finite),
    PropertyId.NIL_CLEAN: PropertyDef("every a = e + n, e idempotent, n nilpotent", _nil_clean),
    PropertyId.REGULAR: PropertyDef("every a = aba for some b", _regular),
    PropertyId.STRONGLY_REGULAR: PropertyDef("every a = a^2 b for some b", _strongly_regular),
    PropertyId.DOMAIN: PropertyDef("ab = 0 implies a = 0 or b = 0", _domain),
    PropertyId.SEMICOMMUTATIVE: PropertyDef("ab = 0 implies aRb = 0", _semicommutative),
    PropertyId.CENTRAL_SEMICOMMUTATIVE: PropertyDef(
        "ab = 0 implies arb central for every r", _central_semicommutative
    ),
    PropertyId.WEAKLY_SEMICOMMUTATIVE: PropertyDef(
        "ab = 0 implies arb nilpotent for every r", _weakly_semicommutative
    ),
    PropertyId.PRIME: PropertyDef("aRb = 0 implies a = 0 or b = 0", _prime),
    PropertyId.SEMIPRIME: PropertyDef("aRa = 0 implies a = 0", _semiprime),
    PropertyId.TWO_PRIMAL: PropertyDef("prime radical equals the nilpotent set", _two_primal),
    PropertyId.RIGHT_PP: PropertyDef("r(a) = eR for an idempotent e", _right_pp),
    PropertyId.LEFT_PP: PropertyDef("l(a) = Re for an idempotent e", _left_pp),
    PropertyId.RIGHT_PQ_BAER: PropertyDef("r(aR) = eR for an idempotent e", _right_pq_baer),
    PropertyId.LEFT_PQ_BAER: PropertyDef("l(Ra) = Re for an idempotent e", _left_pq_baer),
    PropertyId.RIGHT_NONSINGULAR: PropertyDef("right singular ideal is zero", _right_nonsingular),
    PropertyId.LEFT_NONSINGULAR: PropertyDef("left singular ideal is zero", _left_nonsingular),
}

ELEMENT_PROPERTIES = frozenset({
    PropertyId.COMMUTATIVE, PropertyId.REDUCED, PropertyId.CENTRAL_REDUCED, PropertyId.ABELIAN,
    PropertyId.UNIT_CENTRAL, PropertyId.DIRECTLY_FINITE, PropertyId.NIL_CLEAN,
    PropertyId.REGULAR, PropertyId.STRONGLY_REGULAR, PropertyId.DOMAIN,
})
RELATION_PROPERTIES = frozenset({
    PropertyId.SEMICOMMUTATIVE, PropertyId.CENTRAL_SEMICOMMUTATIVE,
    PropertyId.WEAKLY_SEMICOMMUTATIVE, PropertyId.PRIME, PropertyId.SEMIPRIME,
})
ANNIHILATOR_PROPERTIES = frozenset({
    PropertyId.RIGHT_PP, PropertyId.LEFT_PP, PropertyId.RIGHT_PQ_BAER,
    PropertyId.LEFT_PQ_BAER, PropertyId.RIGHT_NONSINGULAR, PropertyId.LEFT_NONSINGULAR,
})


def _dispatch(R: FiniteRing, p: PropertyId | str, group: frozenset[PropertyId]) -> Verdict:
    p = PropertyId(p)
    if p not in group:
        raise ValueError(f"{p.value} is not in this property group")
    return PROPERTY_CATALOG[p].check(R)


def check_element_property(R: FiniteRing, p: PropertyId | str) -> Verdict:
    return _dispatch(R, p, ELEMENT_PROPERTIES)


def check_relation_property(R: FiniteRing, p: PropertyId | str) -> Verdict:
    return _dispatch(R, p, RELATION_PROPERTIES)


def check_annihilator_property(R: FiniteRing, p: PropertyId | str) -> Verdict:
    return _dispatch(R, p, ANNIHILATOR_PROPERTIES)


def check_property(R: FiniteRing, p: PropertyId | str) -> Verdict:
    p = PropertyId(p)
    verdict = PROPERTY_CATALOG[p].check(R)
    logger.debug("%s: %s", p.value, verdict.result_label)
    return verdict


# ---------------------------------------------------------------------------
# Re-verification
# ---------------------------------------------------------------------------

def _nil(R: FiniteRing, a: int) -> bool:
    return is_nilpotent(R, a)[0]


def _central(R: FiniteRing, a: int) -> bool:
    return all(R.mul[a, x] == R.mul[x, a] for x in range(R.order))


def _idempotent(R: FiniteRing, e: int) -> bool:
    return R.mul[e, e] == e


def _ideal_of(R: FiniteRing, e: int, side: Sidedness) -> Subset:
    if side == Sidedness.RIGHT:
        return Subset.from_indices(R.order, {int(R.mul[e, x]) for x in range(R.order)})
    return Subset.from_indices(R.order, {int(R.mul[x, e]) for x in range(R.order)})


def _not_idempotent_generated(R: FiniteRing, ann: Subset, side: Sidedness) -> bool:
    return all(
        _ideal_of(R, e, side) != ann for e in range(R.order) if _idempotent(R, e)
    )


def _recheck_element(R: FiniteRing, p: PropertyId, v: Verdict) -> bool:
    n, zero, one = R.order, R.zero, R.one
    elems = range(n)
    match p:
        case PropertyId.COMMUTATIVE:
            return not R.commutes(v.element("a"), v.element("b"))
        case PropertyId.REDUCED:
            a = v.element("a")
            return a != zero and _nil(R, a)
        case PropertyId.CENTRAL_REDUCED:
            return _nil(R, v.element("a")) and not R.commutes(v.element("a"), v.element("b"))
        case PropertyId.ABELIAN:
            e = v.element("e")
            return _idempotent(R, e) and not R.commutes(e, v.element("b"))
        case PropertyId.UNIT_CENTRAL:
            u = v.element("u")
            is_unit = any(R.times(u, x) == one and R.times(x, u) == one for x in elems)
            return is_unit and not R.commutes(u, v.element("b"))
        case PropertyId.DIRECTLY_FINITE:
            a, b = v.element("a"), v.element("b")
            return R.times(a, b) == one and R.times(b, a) != one
        case PropertyId.NIL_CLEAN:
            a = v.element("a")
            return not any(
                _idempotent(R, e) and _nil(R, R.minus(a, e)) for e in elems
            )
        case PropertyId.REGULAR:
            a = v.element("a")
            return all(R.times(R.times(a, b), a) != a for b in elems)
        case PropertyId.STRONGLY_REGULAR:
            a = v.element("a")
            return all(R.times(R.times(a, a), b) != a for b in elems)
        case PropertyId.DOMAIN:
            a, b = v.element("a"), v.element("b")
            return a != zero and b != zero and R.times(a, b) == zero
    raise ValueError(p)


def _recheck_relation(R: FiniteRing, p: PropertyId, v: Verdict) -> bool:
    zero = R.zero
    a = v.element("a")
    if p == PropertyId.SEMIPRIME:
        return a != zero and all(R.times(R.times(a, r), a) == zero for r in range(R.order))
    if p == PropertyId.TWO_PRIMAL:
        return _nil(R, a) and a not in prime_radical(R)
    b = v.element("b")
    if p == PropertyId.PRIME:
        return (
            a != zero and b != zero
            and all(R.times(R.times(a, r), b) == zero for r in range(R.order))
        )
    arb = R.times(R.times(a, v.element("r")), b)
    if R.times(a, b) != zero:
        return False
    if p == PropertyId.SEMICOMMUTATIVE:
        return arb != zero
    if p == PropertyId.CENTRAL_SEMICOMMUTATIVE:
        return not _central(R, arb)
    return not _nil(R, arb)


def _recheck_annihilator(R: FiniteRing, p: PropertyId, v: Verdict) -> bool:
    a = v.element("a")
    n = R.order
    match p:
        case PropertyId.RIGHT_PP:
            return _not_idempotent_generated(R, right_annihilator(R, a), Sidedness.RIGHT)
        case PropertyId.LEFT_PP:
            return _not_idempotent_generated(R, left_annihilator(R, a), Sidedness.LEFT)
        case PropertyId.RIGHT_PQ_BAER:
            aR = {R.times(a, r) for r in range(n)}
            ann = Subset.from_indices(
                n, [y for y in range(n) if all(R.times(z, y) == R.zero for z in aR)]
            )
            return _not_idempotent_generated(R, ann, Sidedness.RIGHT)
        case PropertyId.LEFT_PQ_BAER:
            Ra = {R.times(r, a) for r in range(n)}
            ann = Subset.from_indices(
                n, [y for y in range(n) if all(R.times(y, z) == R.zero for z in Ra)]
            )
            return _not_idempotent_generated(R, ann, Sidedness.LEFT)
        case PropertyId.RIGHT_NONSINGULAR:
            return a != R.zero and is_essential_right_ideal(R, right_annihilator(R, a))
        case PropertyId.LEFT_NONSINGULAR:
            return a != R.zero and is_essential_left_ideal(R, left_annihilator(R, a))
    raise ValueError(p)


def recheck(R: FiniteRing, verdict: Verdict) -> bool:
    """Re-verify a fails witness against the defining formula, independently of the sweep.

    Verdicts without a definite failure carry nothing to re-verify and return True.
    """
    if verdict.status != VerdictStatus.FAILS:
        return True
    pid = verdict.property_id
    if pid in {p.value for p in PolyPropertyId} or pid.startswith("nilpotent_coefficients"):
        return recheck_poly(R, verdict)
    p = PropertyId(pid)
    if p in ELEMENT_PROPERTIES:
        return _recheck_element(R, p, verdict)
    if p in ANNIHILATOR_PROPERTIES:
        return _recheck_annihilator(R, p, verdict)
    return _recheck_relation(R, p, verdict)
