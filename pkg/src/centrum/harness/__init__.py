"""Theorem suite: corpus, registry and runner."""

from centrum.harness.corpus import CorpusEntry, corpus_default
from centrum.harness.runner import TheoremSuite, evaluate_entry
from centrum.harness.theorems import THEOREMS, RingFacts, TheoremCase, get_theorem

__all__ = [
    "THEOREMS",
    "CorpusEntry",
    "RingFacts",
    "TheoremCase",
    "TheoremSuite",
    "corpus_default",
    "evaluate_entry",
    "get_theorem",
]
