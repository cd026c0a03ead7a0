"""Bounded-degree polynomial checks over a finite ring.

The Armendariz conditions quantify over polynomials of every degree, so a
search up to degree d can refute them but never prove them. Results are
three-valued: fails (with f, g, i, j), no_counterexample_up_to(d), or
holds_exhaustive for the one case where the conclusion is trivially true
(central variants over a commutative ring).

f(x)g(x) = 0 iff (f/x^s)(g/x^t) = 0, and dividing by a power of x keeps the
coefficient products, so only f and g with a nonzero constant term are searched.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from typing import TypeAlias

import numpy as np

from centrum.core.config import Settings
from centrum.core.errors import BudgetExceededError, HypothesisNotMetError, OrderCapError
from centrum.core.models import (
    PolyPropertyId,
    Verdict,
    VerdictStatus,
    WitnessItem,
    fails,
    holds,
)
from centrum.ring import FiniteRing, is_nilpotent

logger = logging.getLogger(__name__)

Poly: TypeAlias = tuple[int, ...]

LINEAR_VARIANTS = {PolyPropertyId.LINEAR_ARMENDARIZ, PolyPropertyId.CENTRAL_LINEAR_ARMENDARIZ}
CENTRAL_VARIANTS = {PolyPropertyId.CENTRAL_ARMENDARIZ, PolyPropertyId.CENTRAL_LINEAR_ARMENDARIZ}

COEFFICIENT_CENTRALITY = "nilpotent_coefficients_central"
COEFFICIENT_NILPOTENCY = "nilpotent_coefficients_nilpotent"


# ---------------------------------------------------------------------------
# Polynomial arithmetic
# ---------------------------------------------------------------------------

def poly_mul(R: FiniteRing, f: Sequence[int], g: Sequence[int]) -> Poly:
    """Convolution: coefficient k is the sum of a_i·b_j over i + j = k."""
    out = [R.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == R.zero:
            continue
        row = R.mul[a]
        for j, b in enumerate(g):
            out[i + j] = int(R.add[out[i + j], row[b]])
    return tuple(out)


def _trim(R: FiniteRing, f: Poly) -> Poly:
    end = len(f)
    while end > 1 and f[end - 1] == R.zero:
        end -= 1
    return f[:end]


def is_zero_poly(R: FiniteRing, f: Sequence[int]) -> bool:
    return all(c == R.zero for c in f)


def format_poly(R: FiniteRing, f: Sequence[int]) -> str:
    """'a0 + a1*x + a2*x^2' over element names, zero terms omitted."""
    parts = []
    for i, c in enumerate(f):
        if c == R.zero:
            continue
        name = R.name(c)
        if i == 0:
            parts.append(name)
            continue
        if any(ch in name for ch in "+* "):
            name = f"({name})"
        parts.append(f"{name}*x" if i == 1 else f"{name}*x^{i}")
    return " + ".join(parts) if parts else R.name(R.zero)


def poly_is_nilpotent(
    R: FiniteRing, f: Sequence[int], cap: int | None = None
) -> tuple[bool, int | None]:
    """(True, k) if f^k = 0 for some k <= cap (default order(R)), else (False, None)."""
    cap = R.order if cap is None else cap
    base = _trim(R, tuple(f))
    p = base
    for k in range(1, cap + 1):
        if is_zero_poly(R, p):
            return True, k
        p = _trim(R, poly_mul(R, p, base))
    return False, None


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------

def _poly_item(R: FiniteRing, role: str, f: Sequence[int]) -> WitnessItem:
    return WitnessItem(role=role, text=format_poly(R, f), coeffs=[int(c) for c in f])


def _position(role: str, k: int) -> WitnessItem:
    return WitnessItem(role=role, text=str(k))


def _pair_witness(R: FiniteRing, f: Poly, g: Poly, i: int, j: int) -> list[WitnessItem]:
    return [_poly_item(R, "f", f), _poly_item(R, "g", g), _position("i", i), _position("j", j)]


def _bounded(pid: str, d: int) -> Verdict:
    return Verdict(property_id=pid, status=VerdictStatus.NO_COUNTEREXAMPLE, bound=d)


# ---------------------------------------------------------------------------
# Armendariz family
# ---------------------------------------------------------------------------

def _conclusion_table(R: FiniteRing, p: PolyPropertyId) -> np.ndarray:
    """ok[a, b] is True when the product a·b satisfies the property's conclusion."""
    if p in (PolyPropertyId.ARMENDARIZ, PolyPropertyId.LINEAR_ARMENDARIZ):
        return R.mul == R.zero
    if p in CENTRAL_VARIANTS:
        return R.center_mask[R.mul]
    return R.nilpotent_mask[R.mul]


class _StepCounter:
    def __init__(self, budget: int, what: str):
        self.budget = budget
        self.what = what
        self.steps = 0

    def tick(self, n: int = 1) -> None:
        self.steps += n
        if self.steps > self.budget:
            raise BudgetExceededError(self.steps, self.budget, self.what)


def _heads(R: FiniteRing, length: int) -> Iterator[Poly]:
    """Coefficient vectors with a nonzero constant term, lexicographic order."""
    for v in itertools.product(range(R.order), repeat=length):
        if v[0] != R.zero:
            yield v


def _annihilating_partners(R: FiniteRing, f: Poly, steps: _StepCounter) -> Iterator[Poly]:
    """Every g with g[0] != 0 and f·g = 0, in lexicographic order.

    Coefficient b_k is drawn only from solutions of a_0·b_k = -(a_1 b_{k-1} + ... + a_k b_0);
    the equations of degree above len(f) - 1 are checked once g is complete.
    """
    L = len(f)
    a0 = f[0]
    preimage = [np.flatnonzero(R.mul[a0] == t).tolist() for t in range(R.order)]
    g = [R.zero] * L

    def high_equations_hold() -> bool:
        for k in range(L, 2 * L - 1):
            acc = R.zero
            for j in range(k - L + 1, L):
                acc = int(R.add[acc, R.mul[f[k - j], g[j]]])
            if acc != R.zero:
                return False
        return True

    def extend(k: int) -> Iterator[Poly]:
        if k == L:
            if high_equations_hold():
                yield tuple(g)
            return
        partial = R.zero
        for j in range(k):
            partial = int(R.add[partial, R.mul[f[k - j], g[j]]])
        for b in preimage[int(R.negation[partial])]:
            if k == 0 and b == R.zero:
                continue
            steps.tick()
            g[k] = b
            yield from extend(k + 1)
        g[k] = R.zero

    yield from extend(0)


def _search_zero_products(
    R: FiniteRing, p: PolyPropertyId, d: int, s: Settings
) -> list[WitnessItem] | None:
    ok = _conclusion_table(R, p)
    row_ok = ok.all(axis=1)
    heads = (R.order - 1) * R.order**d
    if heads > s.search_budget:
        raise BudgetExceededError(heads, s.search_budget, f"{p.value} search")
    steps = _StepCounter(s.search_budget, f"{p.value} search")
    for f in _heads(R, d + 1):
        steps.tick()
        if all(row_ok[a] for a in f):
            continue
        for g in _annihilating_partners(R, f, steps):
            bad = ~ok[np.ix_(f, g)]
            if bad.any():
                i, j = (int(x) for x in np.argwhere(bad)[0])
                logger.debug("%s witness after %d steps", p.value, steps.steps)
                return _pair_witness(R, f, g, i, j)
    logger.debug("%s: no counterexample up to degree %d (%d steps)", p.value, d, steps.steps)
    return None


def _search_nil_products(R: FiniteRing, d: int, s: Settings) -> list[WitnessItem] | None:
    """nil_armendariz: fg with nilpotent coefficients must give nilpotent a_i·b_j.

    The hypothesis is membership rather than equality, so every g is enumerated
    against each f with numpy.
    """
    if R.order > s.nil_armendariz_max_order:
        raise OrderCapError(
            f"nil_armendariz is capped at order {s.nil_armendariz_max_order}, ring has {R.order}"
        )
    L = d + 1
    G = np.array(list(_heads(R, L)), dtype=np.int64).reshape(-1, L)
    total = len(G) * len(G)
    if total > s.search_budget:
        raise BudgetExceededError(total, s.search_budget, "nil_armendariz search")
    nil = R.nilpotent_mask
    for f in _heads(R, L):
        hyp = np.ones(len(G), dtype=bool)
        for k in range(2 * L - 1):
            acc = np.full(len(G), R.zero, dtype=np.int64)
            for j in range(max(0, k - L + 1), min(k, L - 1) + 1):
                acc = R.add[acc, R.mul[f[k - j], G[:, j]]]
            hyp &= nil[acc]
        if not hyp.any():
            continue
        products = R.mul[np.array(f)[None, :, None], G[:, None, :]]  # [g, i, j]
        bad = ~nil[products] & hyp[:, None, None]
        if bad.any():
            gi, i, j = (int(x) for x in np.argwhere(bad)[0])
            return _pair_witness(R, f, tuple(int(b) for b in G[gi]), i, j)
    return None


def check_poly_property(
    R: FiniteRing,
    p: PolyPropertyId | str,
    d: int | None = None,
    settings: Settings | None = None,
) -> Verdict:
    s = settings or Settings()
    p = PolyPropertyId(p)
    d = s.degree_bound if d is None else d
    if p in LINEAR_VARIANTS:
        d = 1
    if d < 1:
        raise ValueError(f"degree bound must be at least 1, got {d}")
    if p in CENTRAL_VARIANTS and R.is_commutative:
        return holds(p.value)
    if p == PolyPropertyId.NIL_ARMENDARIZ:
        witness = _search_nil_products(R, d, s)
    else:
        witness = _search_zero_products(R, p, d, s)
    if witness:
        return fails(p.value, witness)
    return _bounded(p.value, d)


# ---------------------------------------------------------------------------
# Nilpotent polynomials
# ---------------------------------------------------------------------------

def nilpotent_polys_coeffs_central(
    R: FiniteRing, d: int | None = None, settings: Settings | None = None
) -> Verdict:
    """Over a central reduced ring, every nilpotent f of degree <= d has central coefficients.

    Candidates are the vectors over N(R); each is confirmed nilpotent before its
    coefficients are tested.
    """
    s = settings or Settings()
    d = s.degree_bound if d is None else d
    if not np.all(R.center_mask[R.nilpotent_mask]):
        raise HypothesisNotMetError("coefficient centrality needs a central reduced ring")
    nil = np.flatnonzero(R.nilpotent_mask).tolist()
    count = len(nil) ** (d + 1)
    if count > s.search_budget:
        raise BudgetExceededError(count, s.search_budget, "nilpotent polynomial search")
    for f in itertools.product(nil, repeat=d + 1):
        nilpotent, _ = poly_is_nilpotent(R, f)
        if not nilpotent:
            logger.debug("candidate %s not nilpotent within order steps", f)
            continue
        for i, c in enumerate(f):
            if not R.center_mask[c]:
                return fails(COEFFICIENT_CENTRALITY, [_poly_item(R, "f", f), _position("i", i)])
    return _bounded(COEFFICIENT_CENTRALITY, d)


def nilpotent_poly_coefficients(
    R: FiniteRing, d: int = 1, settings: Settings | None = None
) -> Verdict:
    """Brute force over every f of degree <= d: a nilpotent f has only nilpotent coefficients.

    f counts as nilpotent when f^k = 0 for some k <= order(R)·(d+1). A longer nilpotency
    index goes unseen, so the verdict is bounded in the exponent as well as the degree.
    """
    s = settings or Settings()
    count = R.order ** (d + 1)
    if count > s.search_budget:
        raise BudgetExceededError(count, s.search_budget, "polynomial nilpotency sweep")
    nil = R.nilpotent_mask
    cap = R.order * (d + 1)
    for f in itertools.product(range(R.order), repeat=d + 1):
        if all(nil[c] for c in f):
            continue
        # f^k starts with a_0^k and ends with lead^k, so both must be nilpotent
        if not (nil[f[0]] and nil[_trim(R, f)[-1]]):
            continue
        if poly_is_nilpotent(R, f, cap)[0]:
            i = next(k for k, c in enumerate(f) if not nil[c])
            return fails(COEFFICIENT_NILPOTENCY, [_poly_item(R, "f", f), _position("i", i)])
    return _bounded(COEFFICIENT_NILPOTENCY, d)


# ---------------------------------------------------------------------------
# Re-verification
# ---------------------------------------------------------------------------

def _item(verdict: Verdict, role: str) -> WitnessItem:
    for w in verdict.witness:
        if w.role == role:
            return w
    raise KeyError(role)


def _is_central(R: FiniteRing, a: int) -> bool:
    return all(R.mul[a, x] == R.mul[x, a] for x in range(R.order))


def recheck_poly(R: FiniteRing, verdict: Verdict) -> bool:
    """Recompute a polynomial witness from scratch against its defining formula."""
    if verdict.status != VerdictStatus.FAILS:
        return True
    f = tuple(_item(verdict, "f").coeffs or ())
    i = int(_item(verdict, "i").text)
    if verdict.property_id == COEFFICIENT_CENTRALITY:
        return poly_is_nilpotent(R, f)[0] and not _is_central(R, f[i])
    if verdict.property_id == COEFFICIENT_NILPOTENCY:
        return poly_is_nilpotent(R, f, R.order * len(f))[0] and not is_nilpotent(R, f[i])[0]
    p = PolyPropertyId(verdict.property_id)
    g = tuple(_item(verdict, "g").coeffs or ())
    j = int(_item(verdict, "j").text)
    product = poly_mul(R, f, g)
    ab = R.times(f[i], g[j])
    if p == PolyPropertyId.NIL_ARMENDARIZ:
        return all(is_nilpotent(R, c)[0] for c in product) and not is_nilpotent(R, ab)[0]
    if not is_zero_poly(R, product):
        return False
    if p in (PolyPropertyId.ARMENDARIZ, PolyPropertyId.LINEAR_ARMENDARIZ):
        return ab != R.zero
    if p in CENTRAL_VARIANTS:
        return not _is_central(R, ab)
    return not is_nilpotent(R, ab)[0]
