"""Finite-scale toolkit for episturmian words."""

__version__ = "0.1.0"
