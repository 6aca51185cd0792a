"""Construction and certification of edge-disjoint maximal outerplanar graph families."""

__version__ = "0.1.0"
