"""Tests for the ring core - validation, element helpers, ideals."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from centrum.constructions.builders import zmod
from centrum.core.config import Settings
from centrum.core.errors import (
    AxiomError,
    DimensionError,
    OrderCapError,
    SubsetError,
    UnknownElementError,
)
from centrum.core.models import Sidedness
from centrum.ring import (
    Subset,
    all_two_sided_ideals,
    center,
    ideal_closure,
    idempotents,
    is_essential_left_ideal,
    is_essential_right_ideal,
    is_ideal,
    is_nilpotent,
    left_annihilator,
    power,
    right_annihilator,
    units,
    validate,
)


def _zn_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    r = np.arange(n)
    return (r[:, None] + r[None, :]) % n, (r[:, None] * r[None, :]) % n


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


class TestValidate:
    """Exhaustive axiom checking on raw tables."""

    def test_z4_is_a_ring(self):
        add, mul = _zn_tables(4)
        R = validate(add, mul)
        assert R.order == 4
        assert R.zero == 0 and R.one == 1
        assert R.names == ("0", "1", "2", "3")

    def test_tables_are_read_only(self):
        R = validate(*_zn_tables(3))
        with pytest.raises(ValueError):
            R.mul[1, 1] = 0

    def test_corrupted_identity_names_identity_axiom(self):
        add, mul = _zn_tables(4)
        mul = mul.copy()
        mul[1, 1] = 0
        with pytest.raises(AxiomError) as exc:
            validate(add, mul)
        assert exc.value.axiom == "identity axiom"
        assert exc.value.witness == (1, 1)

    def test_order_one_rejected(self):
        with pytest.raises(AxiomError) as exc:
            validate([[0]], [[0]], zero=0, one=0)
        assert exc.value.axiom == "zero ≠ one"

    def test_zero_equal_one_rejected(self):
        add, mul = _zn_tables(2)
        with pytest.raises(AxiomError):
            validate(add, mul, zero=0, one=0)

    def test_noncommutative_addition(self):
        add = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]
        _, mul = _zn_tables(3)
        with pytest.raises(AxiomError) as exc:
            validate(add, mul)
        assert exc.value.axiom == "additive commutativity"
        assert exc.value.witness == (1, 2)

    def test_non_square_table(self):
        with pytest.raises(DimensionError):
            validate([[0, 1]], [[0, 1]])

    def test_entry_out_of_range(self):
        add, mul = _zn_tables(3)
        mul = mul.copy()
        mul[2, 2] = 7
        with pytest.raises(DimensionError):
            validate(add, mul)

    def test_duplicate_names(self):
        add, mul = _zn_tables(2)
        with pytest.raises(DimensionError):
            validate(add, mul, names=["a", "a"])

    def test_order_cap(self):
        with pytest.raises(OrderCapError):
            validate(*_zn_tables(4), settings=Settings(max_order=3))


# ---------------------------------------------------------------------------
# Element helpers
# ---------------------------------------------------------------------------


class TestElements:
    """Powers, nilpotency, center, idempotents, units, annihilators."""

    def test_powers_in_z4(self, make_ring):
        R = make_ring("Z 4")
        assert power(R, 2, 2) == 0
        assert power(R, 3, 2) == 1

    def test_power_rejects_zero_exponent(self, make_ring):
        with pytest.raises(ValueError):
            power(make_ring("Z 4"), 3, 0)

    def test_matrix_unit_squares_to_zero(self, make_ring, element):
        R = make_ring("Mat(2, Z 2)")
        assert power(R, element(R, "[[0,1],[0,0]]"), 2) == R.zero

    def test_nilpotency(self, make_ring):
        R = make_ring("Z 4")
        assert is_nilpotent(R, 2) == (True, 2)
        assert is_nilpotent(R, 3) == (False, None)
        assert is_nilpotent(R, 0) == (True, 1)

    def test_equal_diagonal_nilpotent(self, make_ring, element):
        R = make_ring("EqDiagUT(3, Z 2)")
        assert is_nilpotent(R, element(R, "[[0,1,1],[0,0,0],[0,0,0]]")) == (True, 2)

    def test_center_of_commutative_ring(self, make_ring):
        assert len(center(make_ring("Z 6"))) == 6

    def test_center_of_matrix_ring(self, make_ring):
        R = make_ring("Mat(2, Z 2)")
        names = {R.name(i) for i in center(R)}
        assert names == {"[[0,0],[0,0]]", "[[1,0],[0,1]]"}

    def test_equal_diagonal_element_not_central(self, make_ring, element):
        R = make_ring("EqDiagUT(3, Z 2)")
        assert not R.center_mask[element(R, "[[0,1,1],[0,0,0],[0,0,0]]")]

    def test_idempotents_and_units(self, make_ring):
        R = make_ring("Z 4")
        assert idempotents(R).indices() == [0, 1]
        assert units(R).indices() == [1, 3]
        assert idempotents(make_ring("Z 6")).indices() == [0, 1, 3, 4]

    def test_annihilators(self, make_ring):
        R = make_ring("Z 4")
        assert right_annihilator(R, 2).indices() == [0, 2]
        assert right_annihilator(R, R.one).indices() == [R.zero]

    def test_matrix_unit_annihilator(self, make_ring, element):
        R = make_ring("Mat(2, Z 2)")
        e12 = element(R, "[[0,1],[0,0]]")
        right = right_annihilator(R, e12)
        # E12·m keeps the second row of m
        assert len(right) == 4
        assert element(R, "[[1,1],[0,0]]") in right
        assert len(left_annihilator(R, e12)) == 4

    def test_unknown_name_suggests_near_matches(self, make_ring):
        R = make_ring("PolyNil(Z 2, 2)")
        with pytest.raises(UnknownElementError) as exc:
            R.index_of("1+y")
        assert "1+x" in exc.value.near

    def test_names_are_whitespace_insensitive(self, make_ring):
        R = make_ring("Mat(2, Z 2)")
        assert R.index_of("[[0, 1], [0, 0]]") == R.index_of("[[0,1],[0,0]]")


# ---------------------------------------------------------------------------
# Subsets and ideals
# ---------------------------------------------------------------------------


class TestSubset:
    def test_mask_round_trip(self):
        s = Subset.from_indices(10, [0, 3, 9])
        assert Subset.from_mask(s.mask()) == s
        assert s.indices() == [0, 3, 9]
        assert len(s) == 3
        assert 3 in s and 4 not in s

    def test_set_algebra(self):
        a = Subset.from_indices(6, [0, 2, 4])
        b = Subset.from_indices(6, [0, 3])
        assert (a & b).indices() == [0]
        assert (a | b).indices() == [0, 2, 3, 4]
        assert (a & b).issubset(a)
        assert not a.issubset(b)


class TestIdeals:
    """Closure, enumeration and essentiality."""

    def test_is_ideal(self, make_ring):
        R = make_ring("Z 6")
        assert is_ideal(R, Subset.from_indices(6, [0, 2, 4]), Sidedness.TWO_SIDED)
        assert not is_ideal(R, Subset.from_indices(6, [0, 1]), Sidedness.TWO_SIDED)

    def test_closure_in_z12(self, make_ring):
        R = make_ring("Z 12")
        assert ideal_closure(R, [6], Sidedness.TWO_SIDED).indices() == [0, 6]

    def test_closure_of_one_is_whole_ring(self, make_ring):
        R = make_ring("UT(2, Z 2)")
        assert len(ideal_closure(R, [R.one], Sidedness.RIGHT)) == R.order

    def test_closure_of_strict_upper_unit(self, make_ring, element):
        R = make_ring("UT(2, Z 2)")
        e12 = element(R, "[[0,1],[0,0]]")
        closure = ideal_closure(R, [e12], Sidedness.TWO_SIDED)
        assert {R.name(i) for i in closure} == {"[[0,0],[0,0]]", "[[0,1],[0,0]]"}

    def test_ideals_of_z4(self, make_ring):
        ideals = all_two_sided_ideals(make_ring("Z 4"))
        assert [I.indices() for I in ideals] == [[0], [0, 2], [0, 1, 2, 3]]

    def test_ideals_of_z6(self, make_ring):
        ideals = all_two_sided_ideals(make_ring("Z 6"))
        assert [I.indices() for I in ideals] == [[0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]

    def test_ideals_of_upper_triangular(self, make_ring, element):
        R = make_ring("UT(2, Z 2)")
        names = [{R.name(i) for i in I} for I in all_two_sided_ideals(R)]
        first_row = {"[[0,0],[0,0]]", "[[1,0],[0,0]]", "[[0,1],[0,0]]", "[[1,1],[0,0]]"}
        last_column = {"[[0,0],[0,0]]", "[[0,0],[0,1]]", "[[0,1],[0,0]]", "[[0,1],[0,1]]"}
        assert {"[[0,0],[0,0]]", "[[0,1],[0,0]]"} in names
        assert first_row in names
        assert last_column in names

    def test_matrix_ring_is_simple(self, make_ring):
        assert len(all_two_sided_ideals(make_ring("Mat(2, Z 2)"))) == 2

    def test_enumeration_cap(self, make_ring):
        with pytest.raises(OrderCapError):
            all_two_sided_ideals(make_ring("Z 6"), Settings(ideal_enumeration_cap=4))

    def test_essential_ideals(self, make_ring):
        z4 = make_ring("Z 4")
        assert is_essential_right_ideal(z4, Subset.from_indices(4, [0, 2]))
        assert is_essential_left_ideal(z4, Subset.full(4))
        z6 = make_ring("Z 6")
        assert not is_essential_right_ideal(z6, Subset.from_indices(6, [0, 3]))

    def test_essential_needs_an_ideal(self, make_ring):
        with pytest.raises(SubsetError):
            is_essential_right_ideal(make_ring("Z 4"), Subset.from_indices(4, [0, 1]))


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------


class TestOracles:
    """Table computations against plain integer arithmetic."""

    @given(n=st.integers(2, 36), a=st.integers(0, 35))
    @hyp_settings(max_examples=60, deadline=None)
    def test_nilpotency_matches_modular_powers(self, n, a):
        a %= n
        R = zmod(n)
        expected = next((k for k in range(1, n + 1) if pow(a, k, n) == 0), None)
        assert is_nilpotent(R, a) == (expected is not None, expected)
        assert bool(R.nilpotent_mask[a]) == (expected is not None)

    @given(n=st.integers(2, 30), gens=st.lists(st.integers(0, 29), min_size=1, max_size=3))
    @hyp_settings(max_examples=60, deadline=None)
    def test_closure_is_idempotent(self, n, gens):
        R = zmod(n)
        first = ideal_closure(R, [g % n for g in gens], Sidedness.TWO_SIDED)
        again = ideal_closure(R, first.indices(), Sidedness.TWO_SIDED)
        assert again == first
        assert is_ideal(R, first, Sidedness.TWO_SIDED)


# ---------------------------------------------------------------------------
# Corpus-wide invariants
# ---------------------------------------------------------------------------


class TestCorpusInvariants:
    def test_annihilators_are_one_sided_ideals(self, make_ring, corpus_expr):
        R = make_ring(corpus_expr)
        for a in range(R.order):
            assert is_ideal(R, right_annihilator(R, a), Sidedness.RIGHT), R.name(a)
            assert is_ideal(R, left_annihilator(R, a), Sidedness.LEFT), R.name(a)

    def test_center_is_subring(self, make_ring, corpus_expr):
        R = make_ring(corpus_expr)
        C = center(R)
        m, idx = C.mask(), C.indices()
        assert m[R.zero] and m[R.one]
        assert m[R.add[np.ix_(idx, idx)]].all()
        assert m[R.mul[np.ix_(idx, idx)]].all()
        assert m[R.negation[idx]].all()
