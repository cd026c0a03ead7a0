"""Centrum - finite ring laboratory for central reduced rings and their neighbours."""

__version__ = "0.1.0"
