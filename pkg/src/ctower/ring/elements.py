"""Level descriptors, tracked-prime identifiers and canonical element terms."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ..exceptions import TrackedPrimeError


class LevelKind(str, Enum):
    """Kind of ring at one position of a tower."""

    BASE = "base"
    LOC = "loc"
    FAC = "fac"


class PrimeKind(str, Enum):
    """Family a tracked prime belongs to."""

    BASE = "p"
    GEN_X = "x"
    GEN_Y = "y"


@dataclass(frozen=True, order=True)
class PrimeId:
    """Identifier of a tracked prime: p_i, x_i^(k) or y_i^(k)."""

    kind: PrimeKind
    i: int
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if self.i < 0 or (self.k is not None and self.k < 0):
            raise TrackedPrimeError(f"negative index in tracked prime id {self}")
        if (self.kind is PrimeKind.BASE) != (self.k is None):
            raise TrackedPrimeError(f"malformed tracked prime id {self.kind.value}:{self.i}:{self.k}")

    @classmethod
    def base(cls, i: int) -> "PrimeId":
        return cls(PrimeKind.BASE, i)

    @classmethod
    def gen_x(cls, i: int, k: int) -> "PrimeId":
        return cls(PrimeKind.GEN_X, i, k)

    @classmethod
    def gen_y(cls, i: int, k: int) -> "PrimeId":
        return cls(PrimeKind.GEN_Y, i, k)

    @property
    def partner(self) -> "PrimeId":
        """The other generator of the same factorization."""
        if self.kind is PrimeKind.GEN_X:
            return PrimeId.gen_y(self.i, self.k)  # type: ignore[arg-type]
        if self.kind is PrimeKind.GEN_Y:
            return PrimeId.gen_x(self.i, self.k)  # type: ignore[arg-type]
        raise TrackedPrimeError(f"{self} has no generator partner")

    @classmethod
    def parse(cls, text: str) -> "PrimeId":
        """Parse "p:i", "x:i:k" or "y:i:k"."""
        parts = text.strip().split(":")
        try:
            kind = PrimeKind(parts[0])
            numbers = [int(part) for part in parts[1:]]
        except (ValueError, IndexError):
            raise TrackedPrimeError(f"invalid tracked prime id: {text!r}")
        if kind is PrimeKind.BASE and len(numbers) == 1:
            return cls.base(numbers[0])
        if kind is not PrimeKind.BASE and len(numbers) == 2:
            return cls(kind, numbers[0], numbers[1])
        raise TrackedPrimeError(f"invalid tracked prime id: {text!r}")

    def __str__(self) -> str:
        if self.kind is PrimeKind.BASE:
            return f"p:{self.i}"
        return f"{self.kind.value}:{self.i}:{self.k}"


@dataclass(frozen=True)
class TowerLevel:
    """Descriptor of one ring in the chain."""

    index: int
    kind: LevelKind
    parent: Optional[int] = None
    q: Optional[PrimeId] = None
    gen: Optional[Tuple[int, int]] = None


@dataclass(frozen=True)
class RingElement:
    """Canonical-form element of a specific tower level."""

    level: int


@dataclass(frozen=True)
class Integer(RingElement):
    """Element of the base level Z."""

    value: int


@dataclass(frozen=True)
class Plain(RingElement):
    """Element of a localization that already lies in the parent ring."""

    value: RingElement


@dataclass(frozen=True)
class Frac(RingElement):
    """num / q^k with k >= 1 and q not dividing num."""

    num: RingElement
    k: int


Terms = Tuple[Tuple[int, RingElement], ...]


@dataclass(frozen=True)
class FacElement(RingElement):
    """a_m x^m + ... + a_1 x + c + b_1 y + ... + b_n y^n.

    ``xs`` and ``ys`` are (exponent, coefficient) pairs sorted by exponent
    with no zero coefficients.
    """

    xs: Terms
    c: RingElement
    ys: Terms

    def signed_terms(self) -> Tuple[Tuple[int, RingElement], ...]:
        """Nonzero terms keyed by signed exponent (x^m -> m, c -> 0, y^n -> -n)."""
        terms = [(-n, b) for n, b in reversed(self.ys)]
        if not is_zero(self.c):
            terms.append((0, self.c))
        terms.extend(self.xs)
        return tuple(terms)


def is_zero(e: RingElement) -> bool:
    """Zero test on canonical forms."""
    if isinstance(e, Integer):
        return e.value == 0
    if isinstance(e, Plain):
        return is_zero(e.value)
    if isinstance(e, Frac):
        return False
    if isinstance(e, FacElement):
        return not e.xs and not e.ys and is_zero(e.c)
    raise TypeError(f"not a ring element: {e!r}")
