"""Lenses, Biplates and Multiplate with executable law checkers."""

__version__ = "0.1.0"
