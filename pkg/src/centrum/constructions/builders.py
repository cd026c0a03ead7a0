"""Ring builders for every constructor of the expression language.

Matrix, polynomial and group rings are "coordinate rings": elements are
vectors over a base ring and each product coordinate is a sum of terms
gamma * x_u * y_v. They share one vectorized table builder. Pair rings
(products, trivial and Dorroh extensions) broadcast directly. Every result
goes through ``validate``; no construction is trusted to be a ring.
"""

from __future__ import annotations

import itertools
import logging
import re
from collections.abc import Callable, Sequence

import numpy as np

from centrum.constructions.expr import RingExpr, as_expr, predicted_order, render
from centrum.constructions.tablefile import load_table
from centrum.core.config import Settings
from centrum.core.errors import BuildError, OrderCapError, SubsetError
from centrum.core.models import Sidedness
from centrum.ring import Elem, FiniteRing, Subset, ideal_closure, is_ideal, validate

logger = logging.getLogger(__name__)

# (gamma, u, v): gamma * x_u * y_v, gamma None meaning 1
Term = tuple[int | None, int, int]

_BLOCK_CELLS = 1 << 21

_SYMBOL = re.compile(r"[A-Za-z][A-Za-z_]*")
_POLY_VARIABLES = "xyztuvw"
_GROUP_VARIABLES = "ghkl"


# ---------------------------------------------------------------------------
# Names
# ---------------------------------------------------------------------------

def _wrap(name: str) -> str:
    return f"({name})" if any(c in name for c in "+*") else name


def _sum_name(B: FiniteRing, coeffs: Sequence[int], monomials: Sequence[str]) -> str:
    """'1+x', '2*x^2' style names; an empty monomial marks the constant term."""
    parts = []
    for c, mono in zip(coeffs, monomials, strict=True):
        if c == B.zero:
            continue
        if not mono:
            parts.append(B.name(c))
        elif c == B.one:
            parts.append(mono)
        else:
            parts.append(f"{_wrap(B.name(c))}*{mono}")
    return "+".join(parts) if parts else B.name(B.zero)


def _matrix_name(B: FiniteRing, rows: list[list[int]]) -> str:
    return "[" + ",".join("[" + ",".join(B.name(x) for x in row) + "]" for row in rows) + "]"


def _powers(var: str, n: int) -> list[str]:
    return ["" if i == 0 else var if i == 1 else f"{var}^{i}" for i in range(n)]


def _fresh_symbol(B: FiniteRing, candidates: str) -> str:
    """First candidate that no element name of B already uses as a symbol.

    Symbols compare without trailing digits, so "g" is taken once "g1" is.
    Nested constructions stay distinct: PolyNil(PolyNil(Z 2, 2), 2) uses x then y.
    """
    used = {tok for name in B.names for tok in _SYMBOL.findall(name)}
    for c in candidates:
        if c not in used:
            return c
    stem = candidates[0]
    while stem in used:
        stem += "_"
    return stem


# ---------------------------------------------------------------------------
# Coordinate rings
# ---------------------------------------------------------------------------

def _full_carrier(q: int, m: int, limit: int) -> np.ndarray:
    """All length-m vectors over q symbols, ordered by key sum(v_t * q^t)."""
    if q**m > limit:
        raise OrderCapError(f"carrier of {q}^{m} elements exceeds the cap {limit}")
    k = np.arange(q**m, dtype=np.int64)
    return (k[:, None] // (q ** np.arange(m, dtype=np.int64))[None, :]) % q


def _coordinate_ring(
    B: FiniteRing,
    carrier: np.ndarray,
    terms: list[list[Term]],
    one_vec: Sequence[int],
    name_of: Callable[[np.ndarray], str],
    settings: Settings,
) -> FiniteRing:
    n_el, m = carrier.shape
    if n_el > settings.max_order:
        raise OrderCapError(f"order {n_el} exceeds max_order {settings.max_order}")
    weights = B.order ** np.arange(m, dtype=np.int64)
    keys = carrier @ weights
    if np.any(np.diff(keys) <= 0):
        raise BuildError("carrier must be listed in strictly increasing key order")

    def lookup(coords: list[np.ndarray]) -> np.ndarray:
        k = sum(c.astype(np.int64) * w for c, w in zip(coords, weights, strict=True))
        pos = np.minimum(np.searchsorted(keys, k), n_el - 1)
        if not np.array_equal(keys[pos], k):
            raise BuildError("operation leaves the carrier (not closed)")
        return pos.astype(np.int32)

    add = np.empty((n_el, n_el), dtype=np.int32)
    mul = np.empty((n_el, n_el), dtype=np.int32)
    block = max(1, _BLOCK_CELLS // n_el)
    for start in range(0, n_el, block):
        xs = carrier[start : start + block]
        add[start : start + block] = lookup(
            [B.add[xs[:, t][:, None], carrier[:, t][None, :]] for t in range(m)]
        )
        out = []
        for t in range(m):
            acc = np.full((len(xs), n_el), B.zero, dtype=B.mul.dtype)
            for gamma, u, v in terms[t]:
                p = B.mul[xs[:, u][:, None], carrier[:, v][None, :]]
                if gamma is not None:
                    p = B.mul[gamma, p]
                acc = B.add[acc, p]
            out.append(acc)
        mul[start : start + block] = lookup(out)

    def index(vec: Sequence[int]) -> int:
        return int(lookup([np.array([x]) for x in vec])[0])

    names = [name_of(row) for row in carrier]
    return validate(add, mul, index([B.zero] * m), index(one_vec), names, settings)


def _matrix_terms(n: int, pos: dict[tuple[int, int], int]) -> list[list[Term]]:
    terms: list[list[Term]] = [[] for _ in pos]
    for (i, j), t in pos.items():
        for k in range(n):
            if (i, k) in pos and (k, j) in pos:
                terms[t].append((None, pos[(i, k)], pos[(k, j)]))
    return terms


def _matrix_ring(
    B: FiniteRing, n: int, cells: list[tuple[int, int]], settings: Settings
) -> FiniteRing:
    if n < 1:
        raise BuildError(f"matrix size must be at least 1, got {n}")
    pos = {c: t for t, c in enumerate(cells)}

    def name_of(row: np.ndarray) -> str:
        return _matrix_name(
            B, [[int(row[pos[(i, j)]]) if (i, j) in pos else B.zero for j in range(n)]
                for i in range(n)]
        )

    one = [B.one if i == j else B.zero for i, j in cells]
    carrier = _full_carrier(B.order, len(cells), settings.max_order)
    return _coordinate_ring(B, carrier, _matrix_terms(n, pos), one, name_of, settings)


def matrix_ring(B: FiniteRing, n: int, settings: Settings | None = None) -> FiniteRing:
    cells = [(i, j) for i in range(n) for j in range(n)]
    return _matrix_ring(B, n, cells, settings or Settings())


def upper_triangular(B: FiniteRing, n: int, settings: Settings | None = None) -> FiniteRing:
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    return _matrix_ring(B, n, cells, settings or Settings())


def equal_diagonal(B: FiniteRing, n: int, settings: Settings | None = None) -> FiniteRing:
    """Upper triangular n x n matrices whose diagonal entries are all equal.

    Coordinate 0 is the shared diagonal value, the rest are strict-upper cells.
    """
    if n < 1:
        raise BuildError(f"matrix size must be at least 1, got {n}")
    strict = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pos = {c: t + 1 for t, c in enumerate(strict)}
    terms: list[list[Term]] = [[(None, 0, 0)]]
    for i, j in strict:
        t = [(None, 0, pos[(i, j)]), (None, pos[(i, j)], 0)]
        t += [(None, pos[(i, k)], pos[(k, j)]) for k in range(i + 1, j)]
        terms.append(t)

    def name_of(row: np.ndarray) -> str:
        def cell(i: int, j: int) -> int:
            if i == j:
                return int(row[0])
            return int(row[pos[(i, j)]]) if j > i else B.zero

        return _matrix_name(B, [[cell(i, j) for j in range(n)] for i in range(n)])

    one = [B.one] + [B.zero] * len(strict)
    s = settings or Settings()
    carrier = _full_carrier(B.order, len(terms), s.max_order)
    return _coordinate_ring(B, carrier, terms, one, name_of, s)


def truncated_poly(B: FiniteRing, n: int, settings: Settings | None = None) -> FiniteRing:
    """B[x]/(x^n)."""
    if n < 2:
        raise BuildError(f"PolyNil needs n >= 2, got {n}")
    s = settings or Settings()
    terms: list[list[Term]] = [[(None, u, t - u) for u in range(t + 1)] for t in range(n)]
    mono = _powers(_fresh_symbol(B, _POLY_VARIABLES), n)
    one = [B.one] + [B.zero] * (n - 1)
    return _coordinate_ring(
        B, _full_carrier(B.order, n, s.max_order), terms, one,
        lambda row: _sum_name(B, row.tolist(), mono), s,
    )


def poly_quotient(
    B: FiniteRing, coeffs: Sequence[Elem], settings: Settings | None = None
) -> FiniteRing:
    """B[x]/(f) for f = x^n + c_{n-1} x^{n-1} + ... + c_0 with coeffs = [c_0..c_{n-1}]."""
    if not coeffs:
        raise BuildError("PolyMod needs at least one coefficient")
    if not B.is_commutative:
        raise BuildError("PolyMod requires a commutative base ring")
    s = settings or Settings()
    n = len(coeffs)
    # reductions[s] = coefficients of x^s mod f, for s < 2n - 1
    reductions = [[B.one if i == p else B.zero for i in range(n)] for p in range(n)]
    top = [int(B.negation[c]) for c in coeffs]
    for _ in range(n, 2 * n - 1):
        prev = reductions[-1]
        lead = prev[n - 1]
        shifted = [B.zero] + prev[: n - 1]
        reductions.append([B.plus(shifted[i], B.times(lead, top[i])) for i in range(n)])
    terms: list[list[Term]] = [[] for _ in range(n)]
    for u in range(n):
        for v in range(n):
            for t, gamma in enumerate(reductions[u + v]):
                if gamma != B.zero:
                    terms[t].append((None if gamma == B.one else gamma, u, v))
    mono = _powers(_fresh_symbol(B, _POLY_VARIABLES), n)
    one = [B.one] + [B.zero] * (n - 1)
    return _coordinate_ring(
        B, _full_carrier(B.order, n, s.max_order), terms, one,
        lambda row: _sum_name(B, row.tolist(), mono), s,
    )


def group_ring(B: FiniteRing, dims: Sequence[int], settings: Settings | None = None) -> FiniteRing:
    """B[G] for G = Z_{d1} x ... x Z_{dk}; group elements in mixed radix, first factor fastest."""
    if not dims or any(d < 1 for d in dims):
        raise BuildError(f"GroupRing needs positive cyclic orders, got {list(dims)}")
    s = settings or Settings()
    group = [tuple(reversed(g)) for g in itertools.product(*(range(d) for d in reversed(dims)))]
    index = {g: i for i, g in enumerate(group)}
    var = _fresh_symbol(B, _GROUP_VARIABLES)

    def minus(h: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((a - b) % d for a, b, d in zip(h, g, dims, strict=True))

    terms: list[list[Term]] = [
        [(None, index[g], index[minus(h, g)]) for g in group] for h in group
    ]

    def monomial(g: tuple[int, ...]) -> str:
        if len(dims) == 1:
            return _powers(var, dims[0])[g[0]]
        factors = []
        for i, e in enumerate(g):
            if e:
                factors.append(f"{var}{i + 1}" if e == 1 else f"{var}{i + 1}^{e}")
        return "*".join(factors)

    mono = [monomial(g) for g in group]
    one = [B.one] + [B.zero] * (len(group) - 1)
    return _coordinate_ring(
        B, _full_carrier(B.order, len(group), s.max_order), terms, one,
        lambda row: _sum_name(B, row.tolist(), mono), s,
    )


def congruence_matrices(k: int, settings: Settings | None = None) -> FiniteRing:
    """2x2 matrices [[a,b],[c,d]] over Z_{2k} with a = d (mod 2) and b, c even."""
    if k < 1:
        raise BuildError(f"CongMat needs k >= 1, got {k}")
    s = settings or Settings()
    base = zmod(2 * k, s)
    if 2 * k**4 > s.max_order:
        raise OrderCapError(f"CongMat({k}) has order {2 * k**4}, above max_order {s.max_order}")
    full = _full_carrier(2 * k, 4, 8 * s.max_order)
    a, b, c, d = full.T
    carrier = full[((a - d) % 2 == 0) & (b % 2 == 0) & (c % 2 == 0)]
    cells = [(0, 0), (0, 1), (1, 0), (1, 1)]
    pos = {cell: t for t, cell in enumerate(cells)}

    def name_of(row: np.ndarray) -> str:
        return _matrix_name(base, [[int(row[0]), int(row[1])], [int(row[2]), int(row[3])]])

    return _coordinate_ring(base, carrier, _matrix_terms(2, pos), [1, 0, 0, 1], name_of, s)


# ---------------------------------------------------------------------------
# Pair rings
# ---------------------------------------------------------------------------

def zmod(n: int, settings: Settings | None = None) -> FiniteRing:
    if n < 2:
        raise BuildError(f"Z n needs n >= 2, got {n}")
    r = np.arange(n)
    add = (r[:, None] + r[None, :]) % n
    mul = (r[:, None] * r[None, :]) % n
    return validate(add, mul, 0, 1, [str(i) for i in range(n)], settings)


def _pair_names(A: FiniteRing, second: Sequence[str]) -> list[str]:
    return [f"({A.name(r)},{s})" for s in second for r in range(A.order)]


def direct_product(A: FiniteRing, B: FiniteRing, settings: Settings | None = None) -> FiniteRing:
    """A x B; element (a, b) has index a + |A| * b."""
    n = A.order
    idx = np.arange(n * B.order)
    ia, ib = (idx % n), (idx // n)
    add = A.add[ia[:, None], ia[None, :]] + n * B.add[ib[:, None], ib[None, :]]
    mul = A.mul[ia[:, None], ia[None, :]] + n * B.mul[ib[:, None], ib[None, :]]
    return validate(
        add, mul, A.zero + n * B.zero, A.one + n * B.one, _pair_names(A, B.names), settings
    )


def trivial_extension(A: FiniteRing, settings: Settings | None = None) -> FiniteRing:
    """T(A, A): (r, m)(r', m') = (rr', rm' + mr')."""
    n = A.order
    idx = np.arange(n * n)
    r, m = idx % n, idx // n
    R1, R2, M1, M2 = r[:, None], r[None, :], m[:, None], m[None, :]
    add = A.add[R1, R2] + n * A.add[M1, M2]
    mul = A.mul[R1, R2] + n * A.add[A.mul[R1, M2], A.mul[M1, R2]]
    return validate(add, mul, A.zero + n * A.zero, A.one + n * A.zero,
                    _pair_names(A, A.names), settings)


def dorroh(A: FiniteRing, k: int, settings: Settings | None = None) -> FiniteRing:
    """D(A, Z_k): (r, i)(s, j) = (rs + i*s + j*r, ij). Needs char(A) to divide k."""
    if k < 2:
        raise BuildError(f"Dorroh needs k >= 2, got {k}")
    n = A.order
    multiples = np.empty((k + 1, n), dtype=np.int64)
    multiples[0] = A.zero
    for j in range(k):
        multiples[j + 1] = A.add[multiples[j], np.arange(n)]
    if multiples[k, A.one] != A.zero:
        raise BuildError(
            f"Dorroh({k}) is not a ring: the characteristic of the base does not divide {k}"
        )
    idx = np.arange(n * k)
    r, i = idx % n, idx // n
    R1, R2, I1, I2 = r[:, None], r[None, :], i[:, None], i[None, :]
    add = A.add[R1, R2] + n * ((I1 + I2) % k)
    first = A.add[A.add[A.mul[R1, R2], multiples[I1, R2]], multiples[I2, R1]]
    mul = first + n * ((I1 * I2) % k)
    return validate(add, mul, A.zero, A.zero + n, _pair_names(A, [str(j) for j in range(k)]),
                    settings)


# ---------------------------------------------------------------------------
# Quotients and corners
# ---------------------------------------------------------------------------

def quotient(R: FiniteRing, ideal: Subset, settings: Settings | None = None) -> FiniteRing:
    """R/I with cosets represented by their least index, named "[rep]"."""
    if not is_ideal(R, ideal, Sidedness.TWO_SIDED):
        raise SubsetError("quotient needs a two-sided ideal")
    if len(ideal) == R.order:
        raise BuildError("quotient by the whole ring is the zero ring")
    members = ideal.indices()
    coset_min = R.add[:, members].min(axis=1)
    reps = np.unique(coset_min)
    pos = np.searchsorted(reps, coset_min)
    add = pos[R.add[np.ix_(reps, reps)]]
    mul = pos[R.mul[np.ix_(reps, reps)]]
    if len(members) == 1:
        names = [R.name(int(a)) for a in reps]
    else:
        names = [f"[{R.name(int(a))}]" for a in reps]
    return validate(add, mul, int(pos[R.zero]), int(pos[R.one]), names, settings)


def corner(R: FiniteRing, e: Elem, settings: Settings | None = None) -> FiniteRing:
    """eR (= eRe) for a nonzero central idempotent e, with identity e."""
    if e == R.zero:
        raise BuildError("Corner needs a nonzero idempotent")
    if not R.idempotent_mask[e]:
        raise BuildError(f"{R.name(e)} is not idempotent")
    if not R.center_mask[e]:
        raise BuildError(f"{R.name(e)} is not central")
    members = np.unique(R.mul[e, :])
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[members] = np.arange(len(members))
    add = pos[R.add[np.ix_(members, members)]]
    mul = pos[R.mul[np.ix_(members, members)]]
    names = [R.name(int(a)) for a in members]
    return validate(add, mul, int(pos[R.zero]), int(pos[e]), names, settings)


# ---------------------------------------------------------------------------
# Builder
# ---------------------------------------------------------------------------

def element_by_name(R: FiniteRing, name: str) -> Elem:
    return R.index_of(name)


class RingBuilder:
    """Builds rings from expressions, caching every sub-build for the builder's lifetime."""

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or Settings()
        self._cache: dict[RingExpr, FiniteRing] = {}

    def build(self, expr: RingExpr | str) -> FiniteRing:
        e = as_expr(expr)
        if e in self._cache:
            return self._cache[e]
        predicted = predicted_order(e)
        if predicted is not None and predicted > self.settings.max_order:
            raise OrderCapError(
                f"{render(e)} has order {predicted}, above max_order {self.settings.max_order}"
            )
        R = self._construct(e)
        self._cache[e] = R
        logger.info("Built %s (order %d)", render(e), R.order)
        return R

    def _construct(self, e: RingExpr) -> FiniteRing:
        s = self.settings
        a = e.args
        match e.ctor:
            case "Z":
                return zmod(a[0], s)
            case "Mat":
                return matrix_ring(self.build(a[1]), a[0], s)
            case "UT":
                return upper_triangular(self.build(a[1]), a[0], s)
            case "EqDiagUT":
                return equal_diagonal(self.build(a[1]), a[0], s)
            case "Triv":
                return trivial_extension(self.build(a[0]), s)
            case "Dorroh":
                return dorroh(self.build(a[0]), a[1], s)
            case "PolyNil":
                return truncated_poly(self.build(a[0]), a[1], s)
            case "PolyMod":
                base = self.build(a[0])
                return poly_quotient(base, [base.index_of(c) for c in a[1]], s)
            case "Prod":
                return direct_product(self.build(a[0]), self.build(a[1]), s)
            case "GroupRing":
                return group_ring(self.build(a[0]), a[1], s)
            case "CongMat":
                return congruence_matrices(a[0], s)
            case "Corner":
                base = self.build(a[0])
                return corner(base, base.index_of(a[1]), s)
            case "Quot":
                base = self.build(a[0])
                gens = [base.index_of(g) for g in a[1]]
                return quotient(base, ideal_closure(base, gens, Sidedness.TWO_SIDED), s)
            case "Table":
                return load_table(a[0], s)
        raise BuildError(f"no builder for constructor {e.ctor!r}")


def build(expr: RingExpr | str, settings: Settings | None = None) -> FiniteRing:
    return RingBuilder(settings).build(expr)
