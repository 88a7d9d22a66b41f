"""Hexagonal tilings, locally C6 graphs and locally grid graphs."""

__version__ = "0.1.0"
