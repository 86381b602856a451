"""Beauville structures on small finite groups, plus the integer and
polynomial arithmetic behind maximal-torus and Ree-group certifications."""

__version__ = "0.1.0"

CONVENTION = "left-to-right"
