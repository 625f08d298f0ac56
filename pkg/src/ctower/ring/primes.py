"""Registry of tracked primes and their structurally lifted multiple-oracles.

A tracked prime carries a status history over levels. Divisibility queries
recurse from the element's level down towards the prime's birth level: a
localization level tests the numerator, a factorization level tests every
coefficient, and the birth level applies the defining test (integer
division at the base, the x/y criteria at a factorization level).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Dict, List, Optional, Tuple

from sympy import prime as nth_prime

from ..exceptions import NotDivisibleError, TrackedPrimeError
from . import factorization, localization
from .elements import (
    FacElement,
    Frac,
    Integer,
    LevelKind,
    PrimeId,
    PrimeKind,
    RingElement,
    TowerLevel,
)
from .recursion import deep

if TYPE_CHECKING:
    from .tower import Tower

logger = logging.getLogger(__name__)


class PrimeStatus(str, Enum):
    """Status of a tracked prime from some level on."""

    PRIME = "prime"
    FACTORED = "factored"
    UNIT = "unit"
    ASSOCIATE = "associate"


@dataclass(frozen=True)
class StatusEntry:
    """Status change taking effect at ``level``.

    For FACTORED, ``partner`` is the x of the factorization. For ASSOCIATE,
    ``partner`` is the prime this one is associated with and ``inverse`` (if
    known) is the unit u^-1 with self = partner * u.
    """

    level: int
    status: PrimeStatus
    partner: Optional[PrimeId] = None
    inverse: Optional[RingElement] = None


@dataclass
class TrackedPrime:
    """A distinguished prime p_i, x_i^(k) or y_i^(k)."""

    id: PrimeId
    birth_level: int
    history: List[StatusEntry] = field(default_factory=list)
    value: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.history:
            self.history.append(StatusEntry(self.birth_level, PrimeStatus.PRIME))

    def entry_at(self, level: int) -> StatusEntry:
        if level < self.birth_level:
            raise TrackedPrimeError(f"{self.id} does not exist below level {self.birth_level}")
        current = self.history[0]
        for entry in self.history:
            if entry.level > level:
                break
            current = entry
        return current

    def status_at(self, level: int) -> PrimeStatus:
        return self.entry_at(level).status

    @property
    def status(self) -> PrimeStatus:
        return self.history[-1].status

    @property
    def retired_at(self) -> Optional[int]:
        """Level at which the prime became a unit, if it did."""
        for entry in self.history:
            if entry.status is PrimeStatus.UNIT:
                return entry.level
        return None

    def __str__(self) -> str:
        return str(self.id)


class PrimeRegistry:
    """Tracked primes of one tower, with divisibility, exact division and unit tests."""

    def __init__(self, tower: "Tower") -> None:
        self.tower = tower
        self._primes: Dict[PrimeId, TrackedPrime] = {}
        self._elements: Dict[Tuple[PrimeId, int], RingElement] = {}

    # -- registration -------------------------------------------------

    def base_prime(self, i: int) -> TrackedPrime:
        """p_i, the i-th rational prime (p_0 = 2), registered on first use."""
        pid = PrimeId.base(i)
        if pid not in self._primes:
            self._primes[pid] = TrackedPrime(pid, 0, value=int(nth_prime(i + 1)))
        return self._primes[pid]

    def get(self, pid: PrimeId) -> TrackedPrime:
        if pid.kind is PrimeKind.BASE:
            return self.base_prime(pid.i)
        found = self._primes.get(pid)
        if found is None:
            raise TrackedPrimeError(f"unknown tracked prime {pid}")
        return found

    def find(self, pid: PrimeId) -> Optional[TrackedPrime]:
        return self._primes.get(pid)

    def all(self) -> List[TrackedPrime]:
        return [self._primes[pid] for pid in sorted(self._primes)]

    def _set(self, prime: TrackedPrime, entry: StatusEntry) -> None:
        prime.history.append(entry)
        logger.debug("%s -> %s at level %d", prime.id, entry.status.value, entry.level)

    @deep
    def on_localize(self, level: TowerLevel) -> None:
        """Bookkeeping after a localization level has been appended."""
        assert level.q is not None
        q = self.get(level.q)
        self._set(q, StatusEntry(level.index, PrimeStatus.UNIT))
        if q.id.kind is not PrimeKind.GEN_Y:
            return
        # p = x * y with y now a unit: p is prime again, as an associate of x.
        x_id = q.id.partner
        one = self.tower.one(level.parent)  # type: ignore[arg-type]
        y_inverse = Frac(level.index, one, 1)
        for prime in self._primes.values():
            entry = prime.entry_at(level.parent) if prime.birth_level <= level.parent else None  # type: ignore[operator]
            if entry and entry.status is PrimeStatus.FACTORED and entry.partner == x_id:
                self._set(
                    prime,
                    StatusEntry(level.index, PrimeStatus.ASSOCIATE, x_id, y_inverse),
                )

    @deep
    def on_factor(self, level: TowerLevel) -> None:
        """Bookkeeping after a factorization level has been appended."""
        assert level.q is not None and level.gen is not None
        i, k = level.gen
        x_id, y_id = PrimeId.gen_x(i, k), PrimeId.gen_y(i, k)
        self._primes[x_id] = TrackedPrime(x_id, level.index)
        self._primes[y_id] = TrackedPrime(y_id, level.index)
        q = self.get(level.q)
        entry = q.entry_at(level.parent)  # type: ignore[arg-type]
        if entry.status is PrimeStatus.ASSOCIATE and entry.partner is not None:
            # the old partner is an associate of q, which is no longer prime
            self._set(
                self.get(entry.partner),
                StatusEntry(level.index, PrimeStatus.ASSOCIATE, q.id),
            )
        self._set(q, StatusEntry(level.index, PrimeStatus.FACTORED, x_id))

    # -- status ---------------------------------------------------------

    def is_prime_at(self, prime: TrackedPrime, level: int) -> bool:
        if level < prime.birth_level:
            return False
        entry = prime.entry_at(level)
        if entry.status is PrimeStatus.PRIME:
            return True
        if entry.status is PrimeStatus.ASSOCIATE and entry.partner is not None:
            partner = self.get(entry.partner)
            return partner.entry_at(level).status is PrimeStatus.PRIME
        return False

    def is_unit_prime_at(self, prime: TrackedPrime, level: int) -> bool:
        return level >= prime.birth_level and prime.status_at(level) is PrimeStatus.UNIT

    def live_primes(self, level: Optional[int] = None) -> List[TrackedPrime]:
        """Tracked primes that are prime at ``level`` (default: top)."""
        level = self.tower.top_index if level is None else level
        return [p for p in self.all() if self.is_prime_at(p, level)]

    def _require_prime(self, prime: TrackedPrime, level: int) -> None:
        if level < prime.birth_level:
            raise TrackedPrimeError(
                f"{prime.id} is born at level {prime.birth_level}, query at level {level}"
            )
        if not self.is_prime_at(prime, level):
            status = prime.status_at(level)
            raise TrackedPrimeError(f"{prime.id} is {status.value} at level {level}")

    # -- elements -------------------------------------------------------

    @deep
    def element(self, pid: PrimeId, level: Optional[int] = None) -> RingElement:
        """The tracked prime as an element of ``level`` (default: top)."""
        tower = self.tower
        level = tower.top_index if level is None else level
        prime = self.get(pid)
        if level < prime.birth_level:
            raise TrackedPrimeError(f"{pid} does not exist at level {level}")
        key = (pid, level)
        cached = self._elements.get(key)
        if cached is not None:
            return cached
        if level == prime.birth_level:
            if pid.kind is PrimeKind.BASE:
                value: RingElement = Integer(0, prime.value)  # type: ignore[arg-type]
            else:
                birth = tower.level(level)
                one = tower.one(birth.parent)  # type: ignore[arg-type]
                zero = tower.zero(birth.parent)  # type: ignore[arg-type]
                term = ((1, one),)
                if pid.kind is PrimeKind.GEN_X:
                    value = FacElement(level, term, zero, ())
                else:
                    value = FacElement(level, (), zero, term)
        else:
            value = tower.inject(level, self.element(pid, level - 1))
        self._elements[key] = value
        return value

    def cached_elements(self, level: int) -> List[Tuple[PrimeId, RingElement]]:
        """Tracked-prime elements materialized at ``level`` so far."""
        return [(pid, e) for (pid, lvl), e in self._elements.items() if lvl == level]

    # -- oracles --------------------------------------------------------

    @deep
    def divides(self, p: TrackedPrime, sigma: RingElement) -> bool:
        """Exact verdict on p | sigma at sigma's level."""
        self._require_prime(p, sigma.level)
        return self._divides(p, sigma)

    def _divides(self, p: TrackedPrime, sigma: RingElement) -> bool:
        entry = p.entry_at(sigma.level)
        if entry.status is PrimeStatus.ASSOCIATE:
            return self._divides(self.get(entry.partner), sigma)  # type: ignore[arg-type]
        tower = self.tower
        if sigma.level == p.birth_level:
            if isinstance(sigma, Integer):
                return sigma.value % p.value == 0  # type: ignore[operator]
            assert isinstance(sigma, FacElement)
            if p.id.kind is PrimeKind.GEN_X:
                return factorization.x_multiple_oracle(tower, sigma)
            return factorization.y_multiple_oracle(tower, sigma)
        level = tower.level(sigma.level)
        if level.kind is LevelKind.LOC:
            return localization.loc_lift_multiple_oracle(tower, p, sigma)
        return factorization.fac_lift_multiple_oracle(tower, p, sigma)  # type: ignore[arg-type]

    @deep
    def exact_div(self, p: TrackedPrime, sigma: RingElement) -> RingElement:
        """The quotient tau with p * tau = sigma."""
        self._require_prime(p, sigma.level)
        return self._exact_div(p, sigma)

    def _exact_div(self, p: TrackedPrime, sigma: RingElement) -> RingElement:
        tower = self.tower
        entry = p.entry_at(sigma.level)
        if entry.status is PrimeStatus.ASSOCIATE:
            partner = self.get(entry.partner)  # type: ignore[arg-type]
            quotient = self._exact_div(partner, sigma)
            inverse = tower.lift(entry.inverse, sigma.level)  # type: ignore[arg-type]
            return tower.mul(quotient, inverse)
        if sigma.level == p.birth_level:
            if isinstance(sigma, Integer):
                quotient, remainder = divmod(sigma.value, p.value)  # type: ignore[operator]
                if remainder:
                    raise NotDivisibleError(f"{p.id} does not divide {sigma.value}")
                return Integer(0, quotient)
            assert isinstance(sigma, FacElement)
            if p.id.kind is PrimeKind.GEN_X:
                return factorization.exact_div_x(tower, sigma)
            return factorization.exact_div_y(tower, sigma)
        level = tower.level(sigma.level)
        if level.kind is LevelKind.LOC:
            return localization.loc_lift_exact_div(tower, p, sigma)
        return factorization.fac_lift_exact_div(tower, p, sigma)  # type: ignore[arg-type]

    def is_unit(self, sigma: RingElement) -> bool:
        return self.tower.is_unit(sigma)

    @deep
    def is_associate(
        self, p: TrackedPrime, r: TrackedPrime, level: Optional[int] = None
    ) -> bool:
        """Mutual divisibility of two tracked primes, both prime at ``level``."""
        level = self.tower.top_index if level is None else level
        self._require_prime(p, level)
        self._require_prime(r, level)
        return self._divides(p, self.element(r.id, level)) and self._divides(
            r, self.element(p.id, level)
        )

    @deep
    def prime_power_divides(self, p: TrackedPrime, k: int, sigma: RingElement) -> bool:
        """p^k | sigma, by k-fold divide and exact division."""
        if k < 1:
            raise ValueError("prime_power_divides needs k >= 1")
        self._require_prime(p, sigma.level)
        for _ in range(k):
            if not self._divides(p, sigma):
                return False
            sigma = self._exact_div(p, sigma)
        return True

    @deep
    def exact_div_power(self, p: TrackedPrime, k: int, sigma: RingElement) -> RingElement:
        """sigma / p^k."""
        for _ in range(k):
            sigma = self.exact_div(p, sigma)
        return sigma
