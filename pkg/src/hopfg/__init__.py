"""Exact engine for the quantum sl2 Hopf G-bialgebra and its TQFT functor."""

from hopfg.scalars import CycField, CycScalar, FieldParams
from hopfg.labels import Label

__all__ = ["CycField", "CycScalar", "FieldParams", "Label"]
__version__ = "0.1.0"
