"""Exact analysis of intersecting set families: weighted diversity, flower
bases, extremal constructions, exhaustive search and lemma verification."""

__version__ = "0.1.0"
