"""Localization S^-1 A at a tracked prime q, S = {1, q, q^2, ...}.

Elements are Plain(a) for a in A, or Frac(a, k) = a / q^k with k >= 1 and
q not dividing a. That representation is unique, so equality stays structural.
"""

import logging
from typing import TYPE_CHECKING, Tuple

from ..exceptions import LevelMismatchError, TrackedPrimeError
from .elements import Frac, LevelKind, Plain, PrimeId, RingElement, TowerLevel

if TYPE_CHECKING:
    from .primes import TrackedPrime
    from .tower import Tower

logger = logging.getLogger(__name__)


def extend_localize(tower: "Tower", q: PrimeId) -> TowerLevel:
    """Append S^-1 A for the live tracked prime q; q becomes a unit."""
    tower.check_extendable()
    registry = tower.registry
    prime = registry.get(q)
    top = tower.top_index
    if registry.is_unit_prime_at(prime, top):
        raise TrackedPrimeError(f"{q} is already a unit at level {top}")
    if not registry.is_prime_at(prime, top):
        raise TrackedPrimeError(f"{q} is not live at level {top}")

    level = TowerLevel(index=top + 1, kind=LevelKind.LOC, parent=top, q=q)
    tower.append_level(level)
    registry.on_localize(level)
    logger.debug("level %d: localized at %s", level.index, q)
    return level


def _q(tower: "Tower", level: TowerLevel) -> "TrackedPrime":
    assert level.q is not None
    return tower.registry.get(level.q)


def canonicalize_frac(tower: "Tower", level: TowerLevel, a: RingElement, k: int) -> RingElement:
    """Canonical form of a / q^k, where a lives in the parent ring."""
    if a.level != level.parent:
        raise LevelMismatchError(level.parent, a.level, "canonicalize_frac")  # type: ignore[arg-type]
    if k < 0:
        raise ValueError("canonicalize_frac needs k >= 0")
    q = _q(tower, level)
    registry = tower.registry
    while k > 0 and registry.divides(q, a):
        a = registry.exact_div(q, a)
        k -= 1
    if k == 0:
        return Plain(level.index, a)
    return Frac(level.index, a, k)


def _as_fraction(e: RingElement) -> Tuple[RingElement, int]:
    if isinstance(e, Frac):
        return e.num, e.k
    assert isinstance(e, Plain)
    return e.value, 0


def loc_add(tower: "Tower", level: TowerLevel, a: RingElement, b: RingElement) -> RingElement:
    if isinstance(a, Plain) and isinstance(b, Plain):
        return Plain(level.index, tower.add(a.value, b.value))
    na, ka = _as_fraction(a)
    nb, kb = _as_fraction(b)
    k = max(ka, kb)
    if ka < k:
        na = tower.mul(na, tower.q_power(level, k - ka))
    if kb < k:
        nb = tower.mul(nb, tower.q_power(level, k - kb))
    return canonicalize_frac(tower, level, tower.add(na, nb), k)


def loc_neg(tower: "Tower", level: TowerLevel, a: RingElement) -> RingElement:
    if isinstance(a, Frac):
        return Frac(level.index, tower.neg(a.num), a.k)
    assert isinstance(a, Plain)
    return Plain(level.index, tower.neg(a.value))


def loc_mul(tower: "Tower", level: TowerLevel, a: RingElement, b: RingElement) -> RingElement:
    na, ka = _as_fraction(a)
    nb, kb = _as_fraction(b)
    product = tower.mul(na, nb)
    if ka + kb == 0:
        return Plain(level.index, product)
    return canonicalize_frac(tower, level, product, ka + kb)


def loc_is_unit(tower: "Tower", sigma: RingElement) -> bool:
    """Units are u, u*q^k and u/q^k for u a unit of the parent."""
    level = tower.level(sigma.level)
    if isinstance(sigma, Frac):
        return tower.is_unit(sigma.num)
    assert isinstance(sigma, Plain)
    a = sigma.value
    if tower.is_zero(a):
        return False
    q = _q(tower, level)
    registry = tower.registry
    while registry.divides(q, a):
        a = registry.exact_div(q, a)
    return tower.is_unit(a)


def loc_lift_multiple_oracle(tower: "Tower", p: "TrackedPrime", sigma: RingElement) -> bool:
    """p | sigma in S^-1 A iff p divides the numerator in A."""
    numerator = sigma.num if isinstance(sigma, Frac) else sigma.value  # type: ignore[attr-defined]
    return tower.registry.divides(p, numerator)


def loc_lift_exact_div(tower: "Tower", p: "TrackedPrime", sigma: RingElement) -> RingElement:
    """sigma / p, dividing the numerator; q still does not divide the result."""
    registry = tower.registry
    if isinstance(sigma, Frac):
        return Frac(sigma.level, registry.exact_div(p, sigma.num), sigma.k)
    assert isinstance(sigma, Plain)
    return Plain(sigma.level, registry.exact_div(p, sigma.value))
