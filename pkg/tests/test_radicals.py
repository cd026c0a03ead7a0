"""Tests for nilpotent sets, the prime radical and singular ideals."""

from __future__ import annotations

import numpy as np
import pytest

from centrum.constructions import quotient
from centrum.core.config import Settings
from centrum.core.errors import OrderCapError
from centrum.core.models import Sidedness
from centrum.radicals import (
    is_prime_ideal,
    nilpotent_set,
    prime_ideals_oracle,
    prime_radical,
    radical_report,
    singular_ideal,
)
from centrum.ring import Subset, is_ideal


def _names(R, subset: Subset) -> set[str]:
    return {R.name(i) for i in subset}


class TestNilpotentsAndPrimeRadical:
    def test_z8_nilpotents(self, make_ring):
        assert nilpotent_set(make_ring("Z 8")).indices() == [0, 2, 4, 6]

    def test_z6_reduced(self, make_ring):
        assert nilpotent_set(make_ring("Z 6")).indices() == [0]

    def test_upper_triangular(self, make_ring):
        R = make_ring("UT(2, Z 2)")
        expected = {"[[0,0],[0,0]]", "[[0,1],[0,0]]"}
        assert _names(R, nilpotent_set(R)) == expected
        assert _names(R, prime_radical(R)) == expected

    def test_z12_prime_radical(self, make_ring):
        assert prime_radical(make_ring("Z 12")).indices() == [0, 6]

    def test_matrix_ring_prime_radical(self, make_ring):
        R = make_ring("Mat(2, Z 2)")
        assert prime_radical(R).indices() == [R.zero]
        # nilpotents of a simple ring need not form an ideal
        assert len(nilpotent_set(R)) > 1


class TestPrimeIdealOracle:
    def test_z12(self, make_ring):
        primes = {tuple(I.indices()) for I in prime_ideals_oracle(make_ring("Z 12"))}
        assert primes == {(0, 2, 4, 6, 8, 10), (0, 3, 6, 9)}

    def test_z4(self, make_ring):
        assert [I.indices() for I in prime_ideals_oracle(make_ring("Z 4"))] == [[0, 2]]

    def test_matrix_ring(self, make_ring):
        R = make_ring("Mat(2, Z 2)")
        assert [I.indices() for I in prime_ideals_oracle(R)] == [[R.zero]]

    def test_whole_ring_is_not_prime(self, make_ring):
        R = make_ring("Z 5")
        assert not is_prime_ideal(R, Subset.full(5))
        assert is_prime_ideal(R, Subset.from_indices(5, [0]))

    def test_cap(self, make_ring):
        with pytest.raises(OrderCapError):
            prime_ideals_oracle(make_ring("Z 12"), Settings(oracle_max_order=8))

    def test_fixpoint_matches_intersection_of_primes(self, make_ring, corpus_expr):
        R = make_ring(corpus_expr)
        meet = np.ones(R.order, dtype=bool)
        for P in prime_ideals_oracle(R, Settings(oracle_max_order=64)):
            meet &= P.mask()
        assert Subset.from_mask(meet) == prime_radical(R)

    def test_quotient_by_prime_radical_is_semiprime(self, make_ring, corpus_expr):
        R = make_ring(corpus_expr)
        Q = quotient(R, prime_radical(R))
        assert prime_radical(Q).indices() == [Q.zero]


class TestSingularIdeal:
    def test_z4_right(self, make_ring):
        assert singular_ideal(make_ring("Z 4"), Sidedness.RIGHT).indices() == [0, 2]

    def test_matrix_ring_is_nonsingular(self, make_ring):
        R = make_ring("Mat(2, Z 2)")
        assert singular_ideal(R, Sidedness.RIGHT).indices() == [R.zero]
        assert singular_ideal(R, Sidedness.LEFT).indices() == [R.zero]

    def test_z6(self, make_ring):
        assert singular_ideal(make_ring("Z 6"), Sidedness.RIGHT).indices() == [0]

    def test_two_sided_rejected(self, make_ring):
        with pytest.raises(ValueError):
            singular_ideal(make_ring("Z 4"), Sidedness.TWO_SIDED)

    def test_closed_on_corpus(self, make_ring, corpus_expr):
        R = make_ring(corpus_expr)
        assert is_ideal(R, singular_ideal(R, Sidedness.RIGHT), Sidedness.RIGHT)
        assert is_ideal(R, singular_ideal(R, Sidedness.LEFT), Sidedness.LEFT)


class TestRadicalReport:
    def test_two_primal_flag(self, make_ring):
        assert radical_report(make_ring("Z 8")).two_primal
        assert not radical_report(make_ring("Mat(2, Z 2)")).two_primal

    def test_summary_uses_names(self, make_ring):
        R = make_ring("PolyNil(Z 2, 2)")
        summary = radical_report(R).summary(R)
        assert summary["nilpotents"] == ["0", "x"]
        assert summary["prime_radical"] == ["0", "x"]
        assert summary["two_primal"] is True
