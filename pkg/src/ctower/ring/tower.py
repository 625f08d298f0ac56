"""The tower: an append-only chain Z = A_0 ⊆ A_1 ⊆ ... of computable rings.

All arithmetic enters here and is dispatched on the kind of the operands'
level. Elements of different levels never mix implicitly; callers lift
with :meth:`Tower.inject` or :meth:`Tower.lift` first.
"""

import logging
from typing import Dict, List, Optional, Tuple, Union

from ..exceptions import LevelError, LevelMismatchError, TrackedPrimeError
from . import enumeration, factorization, localization
from .elements import (
    FacElement,
    Frac,
    Integer,
    LevelKind,
    Plain,
    PrimeId,
    RingElement,
    TowerLevel,
    is_zero,
)
from .primes import PrimeRegistry, TrackedPrime
from .recursion import deep

logger = logging.getLogger(__name__)

PrimeRef = Union[PrimeId, TrackedPrime, str]


class Tower:
    """A chain of rings with its registry of tracked primes."""

    def __init__(self, base_prime_window: int = 0) -> None:
        self._levels: List[TowerLevel] = [TowerLevel(index=0, kind=LevelKind.BASE)]
        self._frozen = False
        self._constants: Dict[Tuple[int, int], RingElement] = {}
        self._q_powers: Dict[Tuple[int, int], RingElement] = {}
        self.enumeration_cache: Dict[Tuple[int, int], List[RingElement]] = {}
        self.registry = PrimeRegistry(self)
        for i in range(base_prime_window):
            self.registry.base_prime(i)

    # -- chain ---------------------------------------------------------

    @property
    def levels(self) -> Tuple[TowerLevel, ...]:
        return tuple(self._levels)

    @property
    def top_index(self) -> int:
        return len(self._levels) - 1

    @property
    def top(self) -> TowerLevel:
        return self._levels[-1]

    @property
    def frozen(self) -> bool:
        return self._frozen

    def __len__(self) -> int:
        return len(self._levels)

    def level(self, index: int) -> TowerLevel:
        if not 0 <= index < len(self._levels):
            raise LevelError(f"no level {index} (tower has {len(self._levels)} levels)")
        return self._levels[index]

    def freeze(self) -> "Tower":
        """Reject further extensions; queries stay available."""
        self._frozen = True
        return self

    def check_extendable(self) -> None:
        if self._frozen:
            raise LevelError("tower is frozen")

    def append_level(self, level: TowerLevel) -> None:
        self.check_extendable()
        if level.index != len(self._levels) or level.parent != self.top_index:
            raise LevelError(f"level {level.index} does not extend the top level {self.top_index}")
        self._levels.append(level)

    def prime(self, ref: PrimeRef) -> TrackedPrime:
        """Resolve a tracked prime from an id, an "x:i:k" string or the prime itself."""
        if isinstance(ref, TrackedPrime):
            return ref
        if isinstance(ref, str):
            ref = PrimeId.parse(ref)
        return self.registry.get(ref)

    @deep
    def extend_localize(self, q: PrimeRef) -> TowerLevel:
        return localization.extend_localize(self, self.prime(q).id)

    @deep
    def extend_factor(self, q: PrimeRef, gen: Tuple[int, int]) -> TowerLevel:
        return factorization.extend_factor(self, self.prime(q).id, gen)

    # -- constants and embeddings ---------------------------------------

    @deep
    def int_const(self, level: int, n: int) -> RingElement:
        """Image of the integer n at ``level``."""
        key = (level, n)
        cached = self._constants.get(key)
        if cached is not None:
            return cached
        if level == 0:
            value: RingElement = Integer(0, n)
        else:
            value = self.inject(level, self.int_const(level - 1, n))
        self._constants[key] = value
        return value

    def zero(self, level: int) -> RingElement:
        return self.int_const(level, 0)

    def one(self, level: int) -> RingElement:
        return self.int_const(level, 1)

    def inject(self, child: int, e: RingElement) -> RingElement:
        """Canonical image of a parent element in level ``child``."""
        level = self.level(child)
        if level.parent is None or e.level != level.parent:
            raise LevelMismatchError(
                -1 if level.parent is None else level.parent, e.level, "inject"
            )
        if level.kind is LevelKind.LOC:
            return Plain(child, e)
        return FacElement(child, (), e, ())

    def lift(self, e: RingElement, level: int) -> RingElement:
        """Iterated inject from e's level up to ``level``."""
        if level < e.level:
            raise LevelMismatchError(e.level, level, "lift")
        self.level(level)
        while e.level < level:
            e = self.inject(e.level + 1, e)
        return e

    def descend(self, e: RingElement) -> Optional[RingElement]:
        """Preimage one level down, or None if e is not in the parent's image."""
        if isinstance(e, Plain):
            return e.value
        if isinstance(e, FacElement) and not e.xs and not e.ys:
            return e.c
        return None

    def home_level(self, e: RingElement) -> int:
        """Least level whose image contains e."""
        down = self.descend(e)
        while down is not None:
            e = down
            down = self.descend(e)
        return e.level

    # -- arithmetic -------------------------------------------------------

    def _same(self, a: RingElement, b: RingElement, operation: str) -> TowerLevel:
        if a.level != b.level:
            raise LevelMismatchError(a.level, b.level, operation)
        return self.level(a.level)

    @deep
    def add(self, a: RingElement, b: RingElement) -> RingElement:
        level = self._same(a, b, "add")
        if level.kind is LevelKind.BASE:
            return Integer(0, a.value + b.value)  # type: ignore[attr-defined]
        if level.kind is LevelKind.LOC:
            return localization.loc_add(self, level, a, b)
        return factorization.fac_add(self, level, a, b)  # type: ignore[arg-type]

    @deep
    def neg(self, a: RingElement) -> RingElement:
        level = self.level(a.level)
        if level.kind is LevelKind.BASE:
            return Integer(0, -a.value)  # type: ignore[attr-defined]
        if level.kind is LevelKind.LOC:
            return localization.loc_neg(self, level, a)
        return factorization.fac_neg(self, level, a)  # type: ignore[arg-type]

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        self._same(a, b, "sub")
        return self.add(a, self.neg(b))

    @deep
    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        level = self._same(a, b, "mul")
        if level.kind is LevelKind.BASE:
            return Integer(0, a.value * b.value)  # type: ignore[attr-defined]
        if level.kind is LevelKind.LOC:
            return localization.loc_mul(self, level, a, b)
        return factorization.fac_mul(self, level, a, b)  # type: ignore[arg-type]

    @deep
    def power(self, a: RingElement, n: int) -> RingElement:
        if n < 0:
            raise ValueError("power needs a nonnegative exponent")
        result = self.one(a.level)
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def equals(self, a: RingElement, b: RingElement) -> bool:
        self._same(a, b, "equals")
        return a == b

    def is_zero(self, e: RingElement) -> bool:
        return is_zero(e)

    @deep
    def is_unit(self, e: RingElement) -> bool:
        level = self.level(e.level)
        if level.kind is LevelKind.BASE:
            return abs(e.value) == 1  # type: ignore[attr-defined]
        if level.kind is LevelKind.LOC:
            return localization.loc_is_unit(self, e)
        return factorization.fac_is_unit(self, e)  # type: ignore[arg-type]

    @deep
    def q_power(self, level: TowerLevel, n: int) -> RingElement:
        """q^n in the parent of ``level``."""
        key = (level.index, n)
        cached = self._q_powers.get(key)
        if cached is None:
            assert level.q is not None and level.parent is not None
            q = self.registry.element(level.q, level.parent)
            cached = self.power(q, n)
            self._q_powers[key] = cached
        return cached

    # -- factorization levels ---------------------------------------------

    def _fac(self, e: RingElement, operation: str) -> FacElement:
        if not isinstance(e, FacElement):
            raise LevelError(f"{operation} needs an element of a factorization level")
        return e

    @deep
    def deg_x(self, e: RingElement) -> int:
        return factorization.deg_x(self, self._fac(e, "deg_x"))

    @deep
    def deg_y(self, e: RingElement) -> int:
        return factorization.deg_y(self, self._fac(e, "deg_y"))

    @deep
    def degrees(self, e: RingElement) -> factorization.DegPair:
        return factorization.degrees(self, self._fac(e, "degrees"))

    # -- tracked primes ---------------------------------------------------

    def generator(self, kind: str, i: int, k: int, level: Optional[int] = None) -> RingElement:
        """x_i^(k) or y_i^(k) at ``level`` (default: top)."""
        pid = PrimeId.gen_x(i, k) if kind == "x" else PrimeId.gen_y(i, k)
        if self.registry.find(pid) is None:
            raise TrackedPrimeError(f"unknown generator {pid}")
        return self.registry.element(pid, level)

    @deep
    def divides(self, p: PrimeRef, e: RingElement) -> bool:
        return self.registry.divides(self.prime(p), e)

    @deep
    def exact_div(self, p: PrimeRef, e: RingElement) -> RingElement:
        return self.registry.exact_div(self.prime(p), e)

    @deep
    def is_associate(self, p: PrimeRef, r: PrimeRef, level: Optional[int] = None) -> bool:
        return self.registry.is_associate(self.prime(p), self.prime(r), level)

    @deep
    def prime_power_divides(self, p: PrimeRef, k: int, e: RingElement) -> bool:
        return self.registry.prime_power_divides(self.prime(p), k, e)

    # -- canonical forms --------------------------------------------------

    @deep
    def is_canonical(self, e: RingElement) -> bool:
        """Structural canonicity of e and all of its parent payloads."""
        try:
            level = self.level(e.level)
        except LevelError:
            return False
        if level.kind is LevelKind.BASE:
            return isinstance(e, Integer) and isinstance(e.value, int)
        parent = level.parent
        if level.kind is LevelKind.LOC:
            if isinstance(e, Plain):
                return e.value.level == parent and self.is_canonical(e.value)
            if isinstance(e, Frac):
                if e.k < 1 or e.num.level != parent or not self.is_canonical(e.num):
                    return False
                if is_zero(e.num):
                    return False
                q = self.registry.get(level.q)  # type: ignore[arg-type]
                return not self.registry.divides(q, e.num)
            return False
        if not isinstance(e, FacElement):
            return False
        if e.c.level != parent or not self.is_canonical(e.c):
            return False
        for terms in (e.xs, e.ys):
            exponents = [m for m, _ in terms]
            if exponents != sorted(set(exponents)) or any(m < 1 for m in exponents):
                return False
            for _, coef in terms:
                if coef.level != parent or is_zero(coef) or not self.is_canonical(coef):
                    return False
        return True

    @deep
    def enumerate(self, level: int, count: int) -> List[RingElement]:
        """The first ``count`` elements of ``level`` in enumeration order."""
        return enumeration.enumerate_level(self, level, count)

    def __repr__(self) -> str:
        kinds = ",".join(lvl.kind.value for lvl in self._levels)
        return f"Tower(levels=[{kinds}])"
