"""Unisingularity and subspace-covering toolkit for finite linear groups."""

__version__ = "0.1.0"
