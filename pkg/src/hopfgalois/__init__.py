"""Hopf Galois structures on separable field extensions of small degree,
computed through permutation groups."""

__version__ = "0.1.0"
