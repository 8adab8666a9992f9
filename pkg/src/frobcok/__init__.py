"""Exact invariants behind positivity of the Frobenius cokernel B_X in characteristic p."""

__version__ = "0.1.0"
