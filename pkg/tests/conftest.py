"""Shared test fixtures."""

from __future__ import annotations

import pytest

from centrum.constructions import RingBuilder, predicted_order
from centrum.core.config import Settings
from centrum.core.models import Tier
from centrum.harness import corpus_default
from centrum.ring import FiniteRing

# per-element sweeps stay cheap up to this order
CORPUS_SWEEP_ORDER = 64


def pytest_generate_tests(metafunc):
    """Tests taking ``corpus_expr`` run once per small standard-tier corpus ring."""
    if "corpus_expr" in metafunc.fixturenames:
        entries = [
            e for e in corpus_default()
            if e.tier == Tier.STANDARD and (predicted_order(e.tree) or 0) <= CORPUS_SWEEP_ORDER
        ]
        metafunc.parametrize(
            "corpus_expr", [e.expr for e in entries], ids=[e.name for e in entries]
        )


@pytest.fixture
def settings() -> Settings:
    return Settings()


@pytest.fixture
def make_ring(settings):
    """Factory fixture building rings from expressions, sharing one builder cache."""
    builder = RingBuilder(settings)

    def _make(expr: str) -> FiniteRing:
        return builder.build(expr)

    return _make


@pytest.fixture
def element():
    """Look up an element index by name: element(R, "[[0,1],[0,0]]")."""

    def _element(R: FiniteRing, name: str) -> int:
        return R.index_of(name)

    return _element
