"""Noncommutative Littlewood-Richardson coefficients via crystal reflections,
composition tableaux and frank words."""

__version__ = "0.1.0"
