"""Exact computations on finite-dimensional algebras given by structure constants."""

from .algebra import Msc, Side, change_basis, multiply, side_operator, trace_vector
from .field import FieldSpec, Poly, roots_in_field
from .linalg import Mat, Subspace

__all__ = [
    "FieldSpec",
    "Mat",
    "Msc",
    "Poly",
    "Side",
    "Subspace",
    "change_basis",
    "multiply",
    "roots_in_field",
    "side_operator",
    "trace_vector",
]
__version__ = "0.1.0"
