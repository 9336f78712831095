"""Exact decision procedures for normal crossings of free divisors."""
from .poly import Polynomial, RingContext, ring
from .ideal import Ideal
from .divisor import DivisorGerm, VectorField, decide_normal_crossing

__all__ = ["Polynomial", "RingContext", "ring", "Ideal", "DivisorGerm", "VectorField", "decide_normal_crossing"]
__version__ = "0.1.0"
