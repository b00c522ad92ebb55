"""Dessins of real trigonal curves: representation, rewriting, classification."""

from .core import (
    SOLID, BOLD, DOTTED, BLACK, WHITE, CROSS,
    MONO_SOLID, MONO_BOLD, MONO_DOTTED,
    Dessin, BuildError, DegreeInconsistent, Violation,
    build, from_obj, validate_trichotomic, validate_dessin,
    vertex_index, dessin_degree, regions, classify_dessin,
)

__all__ = [
    "SOLID", "BOLD", "DOTTED", "BLACK", "WHITE", "CROSS",
    "MONO_SOLID", "MONO_BOLD", "MONO_DOTTED",
    "Dessin", "BuildError", "DegreeInconsistent", "Violation",
    "build", "from_obj", "validate_trichotomic", "validate_dessin",
    "vertex_index", "dessin_degree", "regions", "classify_dessin",
]

__version__ = "0.1.0"
