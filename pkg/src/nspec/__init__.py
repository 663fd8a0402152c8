"""Exact spectrum invariants of polynomial germs read off their Newton polyhedra."""

from .errors import (
    ConjectureFinding,
    HypothesisError,
    InvariantError,
    NotConvenientError,
    NotSimplicialError,
    NspecError,
    ParseError,
)
from .fracpoly import BivarPoly, FracPoly
from .newton import Face, NewtonPolyhedron, build_polyhedron
from .polyparse import Support, load_input, parse_polynomial

__all__ = [
    "BivarPoly",
    "ConjectureFinding",
    "Face",
    "FracPoly",
    "HypothesisError",
    "InvariantError",
    "NewtonPolyhedron",
    "NotConvenientError",
    "NotSimplicialError",
    "NspecError",
    "ParseError",
    "Support",
    "build_polyhedron",
    "load_input",
    "parse_polynomial",
]
