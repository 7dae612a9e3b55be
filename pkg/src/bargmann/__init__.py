"""Bargmann invariants, Gram-matrix realizability and overlap witnesses of set imaginarity."""

__version__ = "0.1.0"
