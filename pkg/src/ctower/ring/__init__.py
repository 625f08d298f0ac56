"""Tower rings: the base Z, localizations and xy - q factorization extensions."""

from .elements import (
    FacElement,
    Frac,
    Integer,
    LevelKind,
    Plain,
    PrimeId,
    PrimeKind,
    RingElement,
    TowerLevel,
)
from .factorization import DegPair
from .primes import PrimeRegistry, PrimeStatus, StatusEntry, TrackedPrime
from .tower import Tower

__all__ = [
    "DegPair",
    "FacElement",
    "Frac",
    "Integer",
    "LevelKind",
    "Plain",
    "PrimeId",
    "PrimeKind",
    "PrimeRegistry",
    "PrimeStatus",
    "RingElement",
    "StatusEntry",
    "Tower",
    "TowerLevel",
    "TrackedPrime",
]
