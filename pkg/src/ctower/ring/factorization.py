"""Factorization extension B = A[x, y] / <xy - q>.

Every element has the unique form a_m x^m + ... + a_1 x + c + b_1 y + ... + b_n y^n
with coefficients in A. Internally terms are keyed by a signed exponent
(x^m -> m, c -> 0, y^n -> -n): exponents add under multiplication, and a
product of x^i with y^j picks up q^min(i, j).
"""

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, Iterable, Tuple

from ..exceptions import DegreeError, NotDivisibleError, TrackedPrimeError
from .elements import FacElement, LevelKind, PrimeId, RingElement, TowerLevel

if TYPE_CHECKING:
    from .primes import TrackedPrime
    from .tower import Tower

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegPair:
    """(deg_x, deg_y) of a nonzero element."""

    dx: int
    dy: int

    @property
    def total(self) -> int:
        return self.dx + self.dy


def extend_factor(tower: "Tower", q: PrimeId, gen: Tuple[int, int]) -> TowerLevel:
    """Append A[x, y]/<xy - q>, registering x = x_i^(k) and y = y_i^(k)."""
    tower.check_extendable()
    registry = tower.registry
    prime = registry.get(q)
    top = tower.top_index
    if not registry.is_prime_at(prime, top):
        raise TrackedPrimeError(f"{q} is not live at level {top}")
    i, k = gen
    if registry.find(PrimeId.gen_x(i, k)) is not None:
        raise TrackedPrimeError(f"generators x:{i}:{k}, y:{i}:{k} already exist")

    level = TowerLevel(index=top + 1, kind=LevelKind.FAC, parent=top, q=q, gen=(i, k))
    tower.append_level(level)
    registry.on_factor(level)
    logger.debug("level %d: factored %s = x:%d:%d * y:%d:%d", level.index, q, i, k, i, k)
    return level


def build(
    tower: "Tower", level: TowerLevel, terms: Dict[int, RingElement]
) -> FacElement:
    """Canonical element from signed-exponent terms, dropping zero coefficients."""
    xs = []
    ys = []
    c = None
    for e in sorted(terms):
        coef = terms[e]
        if e == 0:
            c = coef
        elif tower.is_zero(coef):
            continue
        elif e > 0:
            xs.append((e, coef))
        else:
            ys.append((-e, coef))
    ys.sort(key=lambda t: t[0])
    if c is None:
        c = tower.zero(level.parent)  # type: ignore[arg-type]
    return FacElement(level.index, tuple(xs), c, tuple(ys))


def _terms(sigma: FacElement) -> Iterable[Tuple[int, RingElement]]:
    return sigma.signed_terms()


def fac_add(tower: "Tower", level: TowerLevel, a: FacElement, b: FacElement) -> FacElement:
    acc: Dict[int, RingElement] = dict(_terms(a))
    for e, coef in _terms(b):
        acc[e] = tower.add(acc[e], coef) if e in acc else coef
    return build(tower, level, acc)


def fac_neg(tower: "Tower", level: TowerLevel, a: FacElement) -> FacElement:
    return FacElement(
        level.index,
        tuple((m, tower.neg(coef)) for m, coef in a.xs),
        tower.neg(a.c),
        tuple((n, tower.neg(coef)) for n, coef in a.ys),
    )


def fac_mul(tower: "Tower", level: TowerLevel, a: FacElement, b: FacElement) -> FacElement:
    acc: Dict[int, RingElement] = {}
    right = list(_terms(b))
    for ea, ca in _terms(a):
        for eb, cb in right:
            coef = tower.mul(ca, cb)
            if ea * eb < 0:
                coef = tower.mul(coef, tower.q_power(level, min(abs(ea), abs(eb))))
            e = ea + eb
            acc[e] = tower.add(acc[e], coef) if e in acc else coef
    return build(tower, level, acc)


def deg_x(tower: "Tower", sigma: FacElement) -> int:
    """Largest x power; else 0 with a constant; else minus the least y power."""
    terms = sigma.signed_terms()
    if not terms:
        raise DegreeError("deg_x is undefined on zero")
    return terms[-1][0]


def deg_y(tower: "Tower", sigma: FacElement) -> int:
    terms = sigma.signed_terms()
    if not terms:
        raise DegreeError("deg_y is undefined on zero")
    return -terms[0][0]


def degrees(tower: "Tower", sigma: FacElement) -> DegPair:
    return DegPair(deg_x(tower, sigma), deg_y(tower, sigma))


def is_monomial(sigma: FacElement) -> bool:
    """True for a nonzero constant times a single monomial."""
    return len(sigma.signed_terms()) == 1


def lands_in_parent(tower: "Tower", sigma: FacElement, tau: FacElement) -> bool:
    """Whether sigma * tau lies in A, by the three-case classification.

    The product is in A exactly when a factor is zero, both factors are
    constants, or the factors are a x^n and b y^n.
    """
    ts, tt = sigma.signed_terms(), tau.signed_terms()
    if not ts or not tt:
        return True
    if len(ts) != 1 or len(tt) != 1:
        return False
    return ts[0][0] + tt[0][0] == 0


def laurent_coefficients(tower: "Tower", sigma: FacElement) -> Dict[int, RingElement]:
    """Coefficients in A[x, q/x]: y^n = (q/x)^n contributes b_n q^n at x^-n."""
    level = tower.level(sigma.level)
    out: Dict[int, RingElement] = {}
    for e, coef in sigma.signed_terms():
        out[e] = coef if e >= 0 else tower.mul(coef, tower.q_power(level, -e))
    return out


def fac_is_unit(tower: "Tower", sigma: FacElement) -> bool:
    """U(B) = U(A): only unit constants."""
    return not sigma.xs and not sigma.ys and tower.is_unit(sigma.c)


def _coefficients(sigma: FacElement) -> Iterable[RingElement]:
    for _, coef in sigma.xs:
        yield coef
    yield sigma.c
    for _, coef in sigma.ys:
        yield coef


def fac_lift_multiple_oracle(tower: "Tower", p: "TrackedPrime", sigma: FacElement) -> bool:
    """p | sigma iff p divides every coefficient in A."""
    registry = tower.registry
    return all(registry.divides(p, coef) for coef in _coefficients(sigma))


def fac_lift_exact_div(tower: "Tower", p: "TrackedPrime", sigma: FacElement) -> FacElement:
    registry = tower.registry
    return FacElement(
        sigma.level,
        tuple((m, registry.exact_div(p, coef)) for m, coef in sigma.xs),
        registry.exact_div(p, sigma.c),
        tuple((n, registry.exact_div(p, coef)) for n, coef in sigma.ys),
    )


def _level_q(tower: "Tower", sigma: FacElement) -> Tuple[TowerLevel, "TrackedPrime"]:
    level = tower.level(sigma.level)
    assert level.q is not None
    return level, tower.registry.get(level.q)


def x_multiple_oracle(tower: "Tower", sigma: FacElement) -> bool:
    """x | sigma iff q divides the constant and every y coefficient."""
    _, q = _level_q(tower, sigma)
    registry = tower.registry
    return registry.divides(q, sigma.c) and all(registry.divides(q, b) for _, b in sigma.ys)


def y_multiple_oracle(tower: "Tower", sigma: FacElement) -> bool:
    """y | sigma iff q divides the constant and every x coefficient."""
    _, q = _level_q(tower, sigma)
    registry = tower.registry
    return registry.divides(q, sigma.c) and all(registry.divides(q, a) for _, a in sigma.xs)


def exact_div_x(tower: "Tower", sigma: FacElement) -> FacElement:
    """sigma / x: x powers shift down, c/q moves to y, b_j/q moves to y^(j+1)."""
    if not x_multiple_oracle(tower, sigma):
        raise NotDivisibleError("x does not divide the element")
    level, q = _level_q(tower, sigma)
    registry = tower.registry
    shifted: Dict[int, RingElement] = {}
    for e, coef in sigma.signed_terms():
        shifted[e - 1] = coef if e > 0 else registry.exact_div(q, coef)
    return build(tower, level, shifted)


def exact_div_y(tower: "Tower", sigma: FacElement) -> FacElement:
    """sigma / y: y powers shift up, c/q moves to x, a_i/q moves to x^(i+1)."""
    if not y_multiple_oracle(tower, sigma):
        raise NotDivisibleError("y does not divide the element")
    level, q = _level_q(tower, sigma)
    registry = tower.registry
    shifted: Dict[int, RingElement] = {}
    for e, coef in sigma.signed_terms():
        shifted[e + 1] = coef if e < 0 else registry.exact_div(q, coef)
    return build(tower, level, shifted)
