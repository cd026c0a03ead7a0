"""Tests for the counterexample search."""

from __future__ import annotations

import pytest

from centrum.constructions import RingBuilder, parse, render
from centrum.constructions.expr import Z
from centrum.core.config import Settings
from centrum.core.errors import OrderCapError
from centrum.core.models import PolyPropertyId, PropertyId
from centrum.properties import check_property
from centrum.search import (
    CounterexampleSearch,
    default_atoms,
    enumerate_exprs,
    fingerprint,
    matches,
    resolve_property,
)


class TestFingerprint:
    def test_isomorphic_rings_agree(self, make_ring):
        assert fingerprint(make_ring("Triv(Z 2)")) == fingerprint(make_ring("PolyNil(Z 2, 2)"))
        assert fingerprint(make_ring("GroupRing(Z 2, [2])")) == fingerprint(
            make_ring("PolyNil(Z 2, 2)")
        )

    def test_relabelled_tables_agree(self, make_ring):
        # Z6 and Z2 x Z3 differ only in element order
        assert fingerprint(make_ring("Z 6")) == fingerprint(make_ring("Prod(Z 2, Z 3)"))

    def test_distinguishes_characteristic(self, make_ring):
        assert fingerprint(make_ring("Z 4")) != fingerprint(make_ring("Triv(Z 2)"))

    def test_distinguishes_field(self, make_ring):
        assert fingerprint(make_ring("PolyMod(Z 2, [1,1])")) != fingerprint(
            make_ring("Prod(Z 2, Z 2)")
        )


class TestGrammar:
    def test_default_atoms(self):
        rendered = [render(a) for a in default_atoms(4)]
        assert rendered == ["Z 2", "Z 3", "Z 4", "PolyMod(Z 2, [1,1])"]
        assert "CongMat(2)" in [render(a) for a in default_atoms(32)]

    def test_smallest_first(self):
        exprs = [render(e) for e in enumerate_exprs(default_atoms(4), 4, 1)]
        assert exprs[:4] == ["Z 2", "Z 3", "Z 4", "PolyMod(Z 2, [1,1])"]
        assert exprs[4] == "PolyNil(Z 2, 2)"
        assert "Prod(Z 2, Z 2)" in exprs
        assert "Mat(2, Z 2)" not in exprs

    def test_depth_zero_is_atoms(self):
        atoms = [Z(2), Z(3)]
        assert enumerate_exprs(atoms, 10, 0) == atoms

    def test_resolve_property(self):
        assert resolve_property("prime") is PropertyId.PRIME
        assert resolve_property("nil_armendariz") is PolyPropertyId.NIL_ARMENDARIZ
        with pytest.raises(ValueError, match="known"):
            resolve_property("noetherian")


class TestMatches:
    def test_truncated_polynomials(self, make_ring, settings):
        R = make_ring("PolyNil(Z 2, 2)")
        assert matches(R, [PropertyId.CENTRAL_REDUCED], [PropertyId.REDUCED], settings)
        assert matches(R, [], [PropertyId.REDUCED], settings, verify=True)
        assert not matches(R, [PropertyId.REDUCED], [], settings)

    def test_resource_errors_count_as_no_match(self, make_ring):
        R = make_ring("Z 4")
        tight = Settings(search_budget=10)
        assert not matches(R, [PolyPropertyId.ARMENDARIZ], [], tight)


class TestCounterexampleSearch:
    def test_central_reduced_not_reduced(self):
        hits = CounterexampleSearch().run(
            [PropertyId.CENTRAL_REDUCED], [PropertyId.REDUCED], max_order=16
        )
        exprs = [h.expr for h in hits]
        assert "PolyNil(Z 2, 2)" in exprs
        assert hits[0].order == 4
        assert [h.order for h in hits] == sorted(h.order for h in hits)

    def test_abelian_not_central_reduced(self):
        hits = CounterexampleSearch().run(
            [PropertyId.ABELIAN], [PropertyId.CENTRAL_REDUCED], max_order=32
        )
        assert hits
        builder = RingBuilder()
        for h in hits:
            R = builder.build(parse(h.expr))
            assert check_property(R, PropertyId.ABELIAN).favorable
            assert not check_property(R, PropertyId.CENTRAL_REDUCED).favorable

    def test_no_small_prime_counterexample(self):
        hits = CounterexampleSearch().run(
            [PropertyId.PRIME], [PropertyId.CENTRAL_REDUCED], max_order=4
        )
        assert hits == []

    def test_custom_generators(self):
        hits = CounterexampleSearch().run(
            [], [PropertyId.COMMUTATIVE], max_order=8, generators=["Z 2"], depth=1
        )
        assert [h.expr for h in hits] == ["UT(2, Z 2)"]

    def test_nested_generators(self):
        hits = CounterexampleSearch().run(
            [PropertyId.CENTRAL_REDUCED], [PropertyId.REDUCED], max_order=16,
            generators=["PolyNil(Z 2, 2)"], depth=1,
        )
        exprs = [h.expr for h in hits]
        assert exprs[0] == "PolyNil(Z 2, 2)"
        assert "PolyNil(PolyNil(Z 2, 2), 2)" in exprs
        assert [(h.order, h.expr) for h in hits] == sorted((h.order, h.expr) for h in hits)

    def test_empty_grammar(self):
        assert CounterexampleSearch().run([PropertyId.REDUCED], [], 4, ["Z 7"]) == []

    def test_needs_a_property(self):
        with pytest.raises(ValueError):
            CounterexampleSearch().run([], [], max_order=4)

    def test_order_cap(self):
        with pytest.raises(OrderCapError):
            CounterexampleSearch(Settings(max_order=64)).run([PropertyId.REDUCED], [], 128)
