"""Exact combinatorial and algebraic invariants of gentle quivers."""

__version__ = "0.1.0"
