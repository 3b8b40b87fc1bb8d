"""Exact enumeration, asymptotics and sampling for dented Aztec diamonds and hexagons."""
from .errors import DentileError, DomainError, InvariantViolation, RegimeError, UntileableRegion

__version__ = "0.1.0"

__all__ = ["DentileError", "DomainError", "InvariantViolation", "RegimeError",
           "UntileableRegion", "__version__"]
