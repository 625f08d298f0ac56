"""Random canonical elements and sampled checks of the tracked-prime oracles."""

import logging
import random
from typing import Dict, List, Optional

from .builder import Violation
from .config import Config
from .exceptions import CTowerError
from .ring import factorization, localization
from .ring.elements import Integer, LevelKind, RingElement
from .ring.primes import TrackedPrime
from .ring.tower import Tower

logger = logging.getLogger(__name__)


class ElementSampler:
    """Draws canonical elements of any level.

    ``budget`` bounds how many non-constant terms a factorization level may
    add; each level below gets one less, so sizes stay bounded on tall towers.
    """

    def __init__(
        self, tower: Tower, seed: int = 0, coefficient_bound: int = 9, budget: int = 4
    ) -> None:
        self.tower = tower
        self.rng = random.Random(seed)
        self.coefficient_bound = coefficient_bound
        self.budget = budget

    def sample(self, level: Optional[int] = None, budget: Optional[int] = None) -> RingElement:
        level = self.tower.top_index if level is None else level
        budget = self.budget if budget is None else budget
        descriptor = self.tower.level(level)
        rng = self.rng
        if descriptor.kind is LevelKind.BASE:
            bound = self.coefficient_bound
            return Integer(0, rng.randint(-bound, bound))
        parent = descriptor.parent
        assert parent is not None
        if descriptor.kind is LevelKind.LOC:
            num = self.sample(parent, budget)
            if rng.random() < 0.5:
                return self.tower.inject(level, num)
            return localization.canonicalize_frac(self.tower, descriptor, num, rng.randint(1, 2))
        terms: Dict[int, RingElement] = {0: self.sample(parent, budget)}
        if budget > 0:
            for _ in range(rng.randint(0, min(2, budget))):
                exponent = rng.randint(1, budget) * rng.choice((1, -1))
                terms[exponent] = self.sample(parent, budget - 1)
        return factorization.build(self.tower, descriptor, terms)

    def nonzero(self, level: Optional[int] = None) -> RingElement:
        while True:
            e = self.sample(level)
            if not self.tower.is_zero(e):
                return e


def brute_force_inverse(
    tower: Tower,
    e: RingElement,
    bound: Optional[int] = None,
    config: Optional[Config] = None,
) -> Optional[RingElement]:
    """An inverse of e among the first ``bound`` enumerated elements, if any.

    ``bound`` defaults to ``sampling.brute_force_bound``.
    """
    if bound is None:
        bound = (config or Config()).sampling.brute_force_bound
    one = tower.one(e.level)
    for candidate in tower.enumerate(e.level, bound):
        if tower.equals(tower.mul(e, candidate), one):
            return candidate
    return None


def surrogate_checks(
    tower: Tower,
    samples: Optional[int] = None,
    seed: int = 0,
    config: Optional[Config] = None,
) -> List[Violation]:
    """Sampled checks at the top level for every live tracked prime.

    * prime: P | s*t implies P | s or P | t
    * coherence: P | s implies P * (s / P) = s, and P always divides P * s
    * units_persist: a unit of a lower level stays a unit at the top
    * units: an inverse found by brute force means is_unit holds

    ``samples`` defaults to ``sampling.samples``; 0 turns every check off.
    """
    config = config or Config()
    samples = config.sampling.samples if samples is None else samples
    sampler = ElementSampler(
        tower, seed, config.sampling.coefficient_bound, config.sampling.budget
    )
    registry = tower.registry
    top = tower.top_index
    live: List[TrackedPrime] = registry.live_primes(top)
    violations: List[Violation] = []

    def record(check: str, message: str) -> None:
        logger.warning("surrogate %s: %s", check, message)
        violations.append(Violation(check, message))

    for n in range(samples if live else 0):
        prime = live[n % len(live)]
        p = registry.element(prime.id, top)
        s, t = sampler.sample(), sampler.sample()
        try:
            if registry.divides(prime, tower.mul(s, t)) and not (
                registry.divides(prime, s) or registry.divides(prime, t)
            ):
                record("prime", f"{prime.id} divides a product but neither factor (sample {n})")
            if not registry.divides(prime, tower.mul(p, s)):
                record("coherence", f"{prime.id} does not divide its own multiple (sample {n})")
            if registry.divides(prime, s):
                quotient = registry.exact_div(prime, s)
                if not tower.equals(tower.mul(p, quotient), s):
                    record("coherence", f"{prime.id} * (s / {prime.id}) != s (sample {n})")
        except CTowerError as e:
            record("coherence", f"{prime.id}: {e}")

    for level in range(top):
        for _ in range(max(1, samples // max(top, 1) // 4) if samples else 0):
            e = sampler.sample(level)
            if tower.is_unit(e) and not tower.is_unit(tower.lift(e, top)):
                record("units_persist", f"a unit of level {level} is not a unit at level {top}")

    for n in range((samples + 19) // 20):
        e = sampler.nonzero()
        inverse = brute_force_inverse(tower, e, config.sampling.brute_force_bound)
        if inverse is not None and not tower.is_unit(e):
            record("units", f"brute force inverts a non-unit (sample {n})")
    return violations
