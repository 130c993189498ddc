"""Exact checks for the Z/3 orbifold of the Leech lattice VOA."""

__version__ = "0.1.0"
