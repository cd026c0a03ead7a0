"""Finite rings with identity: carrier tables, axiom validation and elementary algebra.

A ring is a pair of order x order index tables. Element identity is the table
index; names are presentation only. Tables are read-only once validated, so a
FiniteRing can be shared between threads and processes.
"""

from __future__ import annotations

import difflib
import logging
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import TypeAlias

import numpy as np

from centrum.core.config import Settings
from centrum.core.errors import (
    AxiomError,
    DimensionError,
    OrderCapError,
    SubsetError,
    UnknownElementError,
)
from centrum.core.models import Sidedness

logger = logging.getLogger(__name__)

Elem: TypeAlias = int


def normalize_name(name: str) -> str:
    """Element names compare whitespace-insensitively."""
    return "".join(name.split())


# ---------------------------------------------------------------------------
# Subsets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subset:
    """Bitset over the element indices of one ring (bit i set iff element i is a member).

    Ideals, annihilators and radicals are all Subsets; sorting by ``bits`` gives
    the canonical order used in reports.
    """

    order: int
    bits: int

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> Subset:
        mask = np.asarray(mask, dtype=bool)
        packed = np.packbits(mask, bitorder="little")
        return cls(len(mask), int.from_bytes(packed.tobytes(), "little"))

    @classmethod
    def from_indices(cls, order: int, indices: Iterable[int]) -> Subset:
        bits = 0
        for i in indices:
            bits |= 1 << int(i)
        return cls(order, bits)

    @classmethod
    def full(cls, order: int) -> Subset:
        return cls(order, (1 << order) - 1)

    def mask(self) -> np.ndarray:
        nbytes = (self.order + 7) // 8
        raw = np.frombuffer(self.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.order].astype(bool)

    def indices(self) -> list[int]:
        return np.flatnonzero(self.mask()).tolist()

    def issubset(self, other: Subset) -> bool:
        return self.bits & ~other.bits == 0

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int | np.integer) and (self.bits >> int(i)) & 1 == 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __and__(self, other: Subset) -> Subset:
        return Subset(self.order, self.bits & other.bits)

    def __or__(self, other: Subset) -> Subset:
        return Subset(self.order, self.bits | other.bits)


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------

class FiniteRing:
    """A validated finite ring with identity. Build instances with :func:`validate`."""

    def __init__(
        self,
        add: np.ndarray,
        mul: np.ndarray,
        zero: Elem,
        one: Elem,
        names: Sequence[str],
    ):
        self.order = int(add.shape[0])
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.names = tuple(names)
        self._index = {normalize_name(n): i for i, n in enumerate(self.names)}

    def __repr__(self) -> str:
        return f"FiniteRing(order={self.order})"

    # --- element plumbing ---

    def name(self, a: Elem) -> str:
        return self.names[a]

    def index_of(self, name: str) -> Elem:
        key = normalize_name(name)
        if key in self._index:
            return self._index[key]
        near = difflib.get_close_matches(key, list(self._index), n=3)
        raise UnknownElementError(name, near)

    def plus(self, a: Elem, b: Elem) -> Elem:
        return int(self.add[a, b])

    def times(self, a: Elem, b: Elem) -> Elem:
        return int(self.mul[a, b])

    def minus(self, a: Elem, b: Elem) -> Elem:
        return int(self.add[a, self.negation[b]])

    def commutes(self, a: Elem, b: Elem) -> bool:
        return self.mul[a, b] == self.mul[b, a]

    # --- derived tables (computed once) ---

    @cached_property
    def negation(self) -> np.ndarray:
        return np.argmax(self.add == self.zero, axis=1)

    @cached_property
    def center_mask(self) -> np.ndarray:
        return np.all(self.mul == self.mul.T, axis=1)

    @cached_property
    def is_commutative(self) -> bool:
        return bool(self.center_mask.all())

    @cached_property
    def nilpotency_index(self) -> np.ndarray:
        """Least k with a^k = 0 per element, 0 when a is not nilpotent."""
        n = self.order
        idx = np.zeros(n, dtype=np.int64)
        elems = np.arange(n)
        p = elems.copy()
        for k in range(1, n + 1):
            hit = (p == self.zero) & (idx == 0)
            idx[hit] = k
            p = self.mul[p, elems]
        return idx

    @cached_property
    def nilpotent_mask(self) -> np.ndarray:
        return self.nilpotency_index > 0

    @cached_property
    def idempotent_mask(self) -> np.ndarray:
        return np.diagonal(self.mul) == np.arange(self.order)

    @cached_property
    def unit_mask(self) -> np.ndarray:
        inv = self.mul == self.one
        return np.any(inv & inv.T, axis=1)

    @cached_property
    def aba(self) -> np.ndarray:
        """aba[a, b] = a·b·a."""
        return self.mul[self.mul, np.arange(self.order)[:, None]]

    @cached_property
    def right_principal(self) -> np.ndarray:
        """right_principal[b, y] is True iff y ∈ bR."""
        n = self.order
        p = np.zeros((n, n), dtype=bool)
        p[np.arange(n)[:, None], self.mul] = True
        return p

    @cached_property
    def left_principal(self) -> np.ndarray:
        """left_principal[b, y] is True iff y ∈ Rb."""
        n = self.order
        p = np.zeros((n, n), dtype=bool)
        p[np.arange(n)[:, None], self.mul.T] = True
        return p


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

_TripleCheck = Callable[[int], tuple[np.ndarray, np.ndarray]]


def _first_triple(n: int, check: _TripleCheck) -> tuple[int, int, int] | None:
    """First (a, b, c) in lexicographic order where the two sides disagree."""
    for a in range(n):
        lhs, rhs = check(a)
        bad = lhs != rhs
        if bad.any():
            b, c = np.unravel_index(int(np.argmax(bad)), bad.shape)
            return a, int(b), int(c)
    return None


def validate(
    add: Sequence[Sequence[int]] | np.ndarray,
    mul: Sequence[Sequence[int]] | np.ndarray,
    zero: Elem = 0,
    one: Elem = 1,
    names: Sequence[str] | None = None,
    settings: Settings | None = None,
) -> FiniteRing:
    """Check every ring axiom exhaustively and return the ring.

    Raises DimensionError for malformed tables and AxiomError naming the first
    violated axiom with a witness triple.
    """
    s = settings or Settings()
    add_t = np.asarray(add)
    mul_t = np.asarray(mul)
    if add_t.ndim != 2 or add_t.shape[0] != add_t.shape[1]:
        raise DimensionError(f"addition table must be square, got shape {add_t.shape}")
    if mul_t.shape != add_t.shape:
        raise DimensionError(
            f"multiplication table shape {mul_t.shape} differs from addition {add_t.shape}"
        )
    n = add_t.shape[0]
    if n < 2:
        raise AxiomError("zero ≠ one", (0, 0), "a ring with identity has at least two elements")
    if n > s.max_order:
        raise OrderCapError(f"order {n} exceeds max_order {s.max_order}")
    for label, t in (("addition", add_t), ("multiplication", mul_t)):
        if not np.issubdtype(t.dtype, np.integer):
            raise DimensionError(f"{label} table must hold integer indices")
        if t.min() < 0 or t.max() >= n:
            raise DimensionError(f"{label} table has entries outside [0, {n})")
    if not (0 <= zero < n and 0 <= one < n):
        raise DimensionError(f"zero={zero} / one={one} outside [0, {n})")
    if zero == one:
        raise AxiomError("zero ≠ one", (zero, one))
    if names is None:
        names = [str(i) for i in range(n)]
    names = list(names)
    if len(names) != n:
        raise DimensionError(f"{len(names)} names for {n} elements")
    seen: dict[str, int] = {}
    for i, nm in enumerate(names):
        key = normalize_name(nm)
        if key in seen:
            raise DimensionError(f"duplicate element name {nm!r} at {seen[key]} and {i}")
        seen[key] = i

    add_t = add_t.astype(np.int32)
    mul_t = mul_t.astype(np.int32)
    elems = np.arange(n)

    # additive group
    bad = np.flatnonzero((add_t[zero] != elems) | (add_t[:, zero] != elems))
    if bad.size:
        x = int(bad[0])
        raise AxiomError("additive identity", (zero, x), f"0+{x} = {add_t[zero, x]}")
    bad_pairs = np.argwhere(add_t != add_t.T)
    if bad_pairs.size:
        a, b = map(int, bad_pairs[0])
        raise AxiomError("additive commutativity", (a, b))
    bad = np.flatnonzero(~np.any(add_t == zero, axis=1))
    if bad.size:
        raise AxiomError("additive inverse", (int(bad[0]),), "no element sums to zero")
    w = _first_triple(n, lambda a: (add_t[add_t[a], :], add_t[a][add_t]))
    if w:
        raise AxiomError("additive associativity", w)

    # multiplication
    bad = np.flatnonzero(mul_t[one] != elems)
    if bad.size:
        x = int(bad[0])
        raise AxiomError(
            "identity axiom", (one, x), f"{names[one]}·{names[x]} = {names[mul_t[one, x]]}"
        )
    bad = np.flatnonzero(mul_t[:, one] != elems)
    if bad.size:
        x = int(bad[0])
        raise AxiomError(
            "identity axiom", (x, one), f"{names[x]}·{names[one]} = {names[mul_t[x, one]]}"
        )
    w = _first_triple(n, lambda a: (mul_t[mul_t[a], :], mul_t[a][mul_t]))
    if w:
        raise AxiomError("multiplicative associativity", w)
    w = _first_triple(
        n, lambda a: (mul_t[a][add_t], add_t[mul_t[a][:, None], mul_t[a][None, :]])
    )
    if w:
        raise AxiomError("left distributivity", w)
    w = _first_triple(
        n, lambda a: (mul_t[:, a][add_t], add_t[mul_t[:, a][:, None], mul_t[:, a][None, :]])
    )
    if w:
        raise AxiomError("right distributivity", w)

    add_t.setflags(write=False)
    mul_t.setflags(write=False)
    logger.debug("validated ring of order %d", n)
    return FiniteRing(add_t, mul_t, zero, one, names)


# ---------------------------------------------------------------------------
# Elementary algebra
# ---------------------------------------------------------------------------

def power(R: FiniteRing, a: Elem, k: int) -> Elem:
    """k-fold product a·a·…·a by iterated multiplication."""
    if k < 1:
        raise ValueError(f"exponent must be positive, got {k}")
    p = a
    for _ in range(k - 1):
        p = int(R.mul[p, a])
    return p


def is_nilpotent(R: FiniteRing, a: Elem) -> tuple[bool, int | None]:
    """(True, least k with a^k = 0) or (False, None).

    Powers of a enter a cycle within order steps, so order is a sufficient bound.
    """
    p = a
    for k in range(1, R.order + 1):
        if p == R.zero:
            return True, k
        p = int(R.mul[p, a])
    return False, None


def center(R: FiniteRing) -> Subset:
    return Subset.from_mask(R.center_mask)


def is_central(R: FiniteRing, a: Elem) -> bool:
    return bool(R.center_mask[a])


def idempotents(R: FiniteRing) -> Subset:
    return Subset.from_mask(R.idempotent_mask)


def units(R: FiniteRing) -> Subset:
    return Subset.from_mask(R.unit_mask)


def right_annihilator(R: FiniteRing, a: Elem) -> Subset:
    """{x : a·x = 0}."""
    return Subset.from_mask(R.mul[a, :] == R.zero)


def left_annihilator(R: FiniteRing, a: Elem) -> Subset:
    """{x : x·a = 0}."""
    return Subset.from_mask(R.mul[:, a] == R.zero)


def is_ideal(R: FiniteRing, S: Subset, side: Sidedness) -> bool:
    """Closure test: contains zero, closed under +, and under the allowed multiplications."""
    m = S.mask()
    if not m[R.zero]:
        return False
    idx = np.flatnonzero(m)
    if not m[R.add[np.ix_(idx, idx)]].all():
        return False
    if side in (Sidedness.RIGHT, Sidedness.TWO_SIDED) and not m[R.mul[idx, :]].all():
        return False
    if side in (Sidedness.LEFT, Sidedness.TWO_SIDED) and not m[R.mul[:, idx]].all():
        return False
    return True


def close_mask(R: FiniteRing, mask: np.ndarray, side: Sidedness) -> np.ndarray:
    mask = mask.copy()
    mask[R.zero] = True
    rounds = 0
    while True:
        rounds += 1
        new = mask.copy()
        idx = np.flatnonzero(new)
        if side in (Sidedness.RIGHT, Sidedness.TWO_SIDED):
            new[R.mul[idx, :].ravel()] = True
        if side in (Sidedness.LEFT, Sidedness.TWO_SIDED):
            new[R.mul[:, idx].ravel()] = True
        idx = np.flatnonzero(new)
        new[R.add[np.ix_(idx, idx)].ravel()] = True
        new[R.negation[idx]] = True
        if np.array_equal(new, mask):
            logger.debug("ideal closure stable after %d rounds (%d elements)", rounds, idx.size)
            return mask
        mask = new


def ideal_closure(R: FiniteRing, gens: Iterable[Elem], side: Sidedness) -> Subset:
    """Least ideal of the given sidedness containing gens."""
    mask = np.zeros(R.order, dtype=bool)
    mask[list(gens)] = True
    return Subset.from_mask(close_mask(R, mask, side))


def ideal_sum(R: FiniteRing, I: Subset, J: Subset) -> Subset:
    """I + J = {i + j}; an ideal whenever I and J are."""
    mask = np.zeros(R.order, dtype=bool)
    mask[R.add[np.ix_(I.indices(), J.indices())].ravel()] = True
    return Subset.from_mask(mask)


def all_two_sided_ideals(R: FiniteRing, settings: Settings | None = None) -> list[Subset]:
    """Every two-sided ideal, sorted by bitset value.

    Every ideal is the sum of the principal ideals of its members, so closing
    the principal ideals under pairwise sums reaches the whole lattice.
    """
    cap = (settings or Settings()).ideal_enumeration_cap
    if R.order > cap:
        raise OrderCapError(f"ideal enumeration capped at order {cap}, ring has {R.order}")
    principals: dict[int, Subset] = {}
    for a in range(R.order):
        p = ideal_closure(R, [a], Sidedness.TWO_SIDED)
        principals.setdefault(p.bits, p)
    found: dict[int, Subset] = dict(principals)
    frontier = list(principals.values())
    while frontier:
        nxt: list[Subset] = []
        for ideal in frontier:
            for p in principals.values():
                if p.issubset(ideal):
                    continue
                s = ideal_sum(R, ideal, p)
                if s.bits not in found:
                    found[s.bits] = s
                    nxt.append(s)
        frontier = nxt
    return [found[b] for b in sorted(found)]


def _essential(R: FiniteRing, E: Subset, principal: np.ndarray) -> bool:
    hits = principal & E.mask()[None, :]
    hits[:, R.zero] = False
    nonzero = np.arange(R.order) != R.zero
    return bool(hits[nonzero].any(axis=1).all())


def is_essential_right_ideal(R: FiniteRing, E: Subset) -> bool:
    """E ∩ bR ≠ {0} for every b ≠ 0.

    Every nonzero right ideal contains a nonzero principal right ideal, so
    testing the principal ones suffices.
    """
    if not is_ideal(R, E, Sidedness.RIGHT):
        raise SubsetError("is_essential_right_ideal needs a right ideal")
    return _essential(R, E, R.right_principal)


def is_essential_left_ideal(R: FiniteRing, E: Subset) -> bool:
    """Mirror of is_essential_right_ideal: E ∩ Rb ≠ {0} for every b ≠ 0."""
    if not is_ideal(R, E, Sidedness.LEFT):
        raise SubsetError("is_essential_left_ideal needs a left ideal")
    return _essential(R, E, R.left_principal)
