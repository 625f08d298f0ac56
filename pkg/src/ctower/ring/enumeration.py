"""Deterministic enumeration of each level's elements.

Elements are grouped into finite height classes and listed class by class,
each class in :func:`sort_key` order. Heights:

* base: ``|n|``
* localization: ``h(a)`` for Plain(a), ``h(a) + k - 1`` for Frac(a, k)
* factorization: the sum over nonzero terms, a constant weighing ``h(a)``
  and an ``x^m`` or ``y^m`` term weighing ``h(a) + m - 1``

Zero is the only element of height 0, so every class is finite and every
element turns up after finitely many steps.
"""

from itertools import count as naturals
from typing import TYPE_CHECKING, Any, Dict, Iterator, List, Tuple

from ..exceptions import LevelError
from .elements import FacElement, Frac, Integer, LevelKind, Plain, RingElement, is_zero

if TYPE_CHECKING:
    from .tower import Tower


def height(tower: "Tower", e: RingElement) -> int:
    if isinstance(e, Integer):
        return abs(e.value)
    if isinstance(e, Plain):
        return height(tower, e.value)
    if isinstance(e, Frac):
        return height(tower, e.num) + e.k - 1
    assert isinstance(e, FacElement)
    total = 0
    for exp, coef in e.signed_terms():
        total += height(tower, coef) + max(abs(exp) - 1, 0)
    return total


def sort_key(e: RingElement) -> Tuple[Any, ...]:
    """Order inside a height class."""
    if isinstance(e, Integer):
        return (abs(e.value), 0 if e.value >= 0 else 1)
    if isinstance(e, Plain):
        return (0, 0, sort_key(e.value))
    if isinstance(e, Frac):
        return (1, e.k, sort_key(e.num))
    assert isinstance(e, FacElement)
    keyed = [(0, m, sort_key(coef)) for m, coef in e.xs]
    if not is_zero(e.c):
        keyed.append((1, 0, sort_key(e.c)))
    for n, coef in e.ys:
        keyed.append((2, n, sort_key(coef)))
    return tuple(keyed)


def height_class(tower: "Tower", level: int, h: int) -> List[RingElement]:
    """All elements of ``level`` with height exactly ``h``, in sort order."""
    key = (level, h)
    cache = tower.enumeration_cache
    cached = cache.get(key)
    if cached is not None:
        return cached
    descriptor = tower.level(level)
    out: List[RingElement]
    if h == 0:
        out = [tower.zero(level)]
    elif descriptor.kind is LevelKind.BASE:
        out = [Integer(0, h), Integer(0, -h)]
    elif descriptor.kind is LevelKind.LOC:
        out = _loc_class(tower, level, h)
    else:
        out = _fac_class(tower, level, h)
    out.sort(key=sort_key)
    cache[key] = out
    return out


def _loc_class(tower: "Tower", level: int, h: int) -> List[RingElement]:
    descriptor = tower.level(level)
    parent: int = descriptor.parent  # type: ignore[assignment]
    q = tower.registry.get(descriptor.q)  # type: ignore[arg-type]
    out: List[RingElement] = [Plain(level, a) for a in height_class(tower, parent, h)]
    for k in range(1, h + 1):
        for a in height_class(tower, parent, h - k + 1):
            if not tower.registry.divides(q, a):
                out.append(Frac(level, a, k))
    return out


def _fac_class(tower: "Tower", level: int, h: int) -> List[RingElement]:
    descriptor = tower.level(level)
    parent: int = descriptor.parent  # type: ignore[assignment]
    # candidate signed exponents, 0, 1, -1, 2, -2, ...
    exponents = [0]
    for m in range(1, h + 1):
        exponents.extend((m, -m))

    out: List[RingElement] = []
    for chosen in _choose_terms(tower, parent, exponents, 0, h):
        terms: Dict[int, RingElement] = dict(chosen)
        xs = tuple(sorted((e, c) for e, c in terms.items() if e > 0))
        ys = tuple(sorted((-e, c) for e, c in terms.items() if e < 0))
        c = terms.get(0, tower.zero(parent))
        out.append(FacElement(level, xs, c, ys))
    return out


def _choose_terms(
    tower: "Tower", parent: int, exponents: List[int], start: int, budget: int
) -> Iterator[List[Tuple[int, RingElement]]]:
    """Term selections over exponents[start:] whose weights sum to ``budget``."""
    if budget == 0:
        yield []
        return
    for idx in range(start, len(exponents)):
        exp = exponents[idx]
        shift = max(abs(exp) - 1, 0)
        for coef_height in range(1, budget - shift + 1):
            for coef in height_class(tower, parent, coef_height):
                for rest in _choose_terms(
                    tower, parent, exponents, idx + 1, budget - shift - coef_height
                ):
                    yield [(exp, coef)] + rest


def iter_level(tower: "Tower", level: int) -> Iterator[RingElement]:
    """Unbounded stream of the level's elements."""
    tower.level(level)
    for h in naturals():
        yield from height_class(tower, level, h)


def enumerate_level(tower: "Tower", level: int, count: int) -> List[RingElement]:
    if count < 0:
        raise LevelError("enumerate needs count >= 0")
    out: List[RingElement] = []
    if count == 0:
        return out
    for e in iter_level(tower, level):
        out.append(e)
        if len(out) >= count:
            break
    return out
