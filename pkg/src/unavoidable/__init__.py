"""Exact geometry-of-numbers toolkit for unavoidable convex bodies and flat Finsler tori."""

__version__ = "0.1.0"
