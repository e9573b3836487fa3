"""Canonical and dual canonical bases of q-wedge Fock spaces for gl(m|n)
and gl(m+n), with their category O readings at q = 1."""

from .canon import bar_matrix, bkl_table, canonical, canonical_regular, dual_canonical
from .fock import FockVector
from .laurent import LaurentPoly
from .weights import Signature, Weight, parse_weight

__version__ = "0.1.0"

__all__ = [
    "FockVector", "LaurentPoly", "Signature", "Weight", "bar_matrix", "bkl_table", "canonical",
    "canonical_regular", "dual_canonical", "parse_weight",
]
