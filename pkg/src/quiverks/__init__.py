"""Cyclic-quiver parabolic Hall-Littlewood functions and their KS
polynomials, computed by operators, by recurrence and by tableaux."""
from .poly import ArrowLaurent, IntegrityError
from .symfunc import hl_triple, ks_polynomial, quiver_hl, reduced_ks

__version__ = "0.1.0"

__all__ = ["ArrowLaurent", "IntegrityError", "hl_triple", "ks_polynomial", "quiver_hl", "reduced_ks"]
