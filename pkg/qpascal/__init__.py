"""Exact q-Pascal-triangle representations of B3 and their irreducibility."""

__version__ = "0.1.0"

__all__ = ["__version__"]
