"""Exact toolkit for nodal Calabi-Yau complete intersections that contain
del Pezzo surfaces: polynomial arithmetic, Groebner-based invariants,
surface catalog, node counting by linkage and by Chern classes, and the
Euler-characteristic bookkeeping for the contracted threefolds."""

from .ring import Ring, Poly, PolyMatrix, random_form, seeded_rng

__version__ = "0.1.0"
