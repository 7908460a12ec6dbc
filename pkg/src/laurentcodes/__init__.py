"""Laurent-polynomial algebra for translation-invariant Pauli stabilizer codes."""

from .field import GF2, GF4, Field, FieldElem
from .laurent import LaurentPoly, ParseError, parse_poly
from .matrix import PolyMatrix

__version__ = "0.1.0"

__all__ = ["GF2", "GF4", "Field", "FieldElem", "LaurentPoly", "ParseError", "parse_poly",
           "PolyMatrix", "__version__"]
