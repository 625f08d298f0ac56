"""Builtin predicates with a known answer to (∀w)(∃z) R(w, z, i)."""

from typing import Optional

from .base import BasePredicate, register_predicate


@register_predicate
class AllPredicate(BasePredicate):
    """R ≡ true: every i acts at every chance."""

    @property
    def name(self) -> str:
        return "all"

    @property
    def description(self) -> str:
        return "R(w, z, i) is always true; every p_i is prime in the limit"

    def evaluate(self, w: int, z: int, i: int) -> bool:
        return True

    def in_set(self, i: int) -> Optional[bool]:
        return True


@register_predicate
class NonePredicate(BasePredicate):
    @property
    def name(self) -> str:
        return "none"

    @property
    def description(self) -> str:
        return "R(w, z, i) is always false; no p_i ever acts"

    def evaluate(self, w: int, z: int, i: int) -> bool:
        return False

    def in_set(self, i: int) -> Optional[bool]:
        return False

    def total_acts(self, i: int) -> Optional[int]:
        return 0


@register_predicate
class EvenPredicate(BasePredicate):
    @property
    def name(self) -> str:
        return "even"

    @property
    def description(self) -> str:
        return "R(w, z, i) holds for even i; p_i is prime in the limit iff i is even"

    def evaluate(self, w: int, z: int, i: int) -> bool:
        return i % 2 == 0

    def in_set(self, i: int) -> Optional[bool]:
        return i % 2 == 0

    def total_acts(self, i: int) -> Optional[int]:
        return None if i % 2 == 0 else 0


@register_predicate
class ThresholdPredicate(BasePredicate):
    """R(w, z, i) = [w < acts[i]], acts[i] = 0 past the list: i acts acts[i] times."""

    @property
    def name(self) -> str:
        return "threshold"

    @property
    def description(self) -> str:
        return "i acts exactly acts[i] times; no p_i is prime in the limit"

    def bound(self, i: int) -> int:
        return self.params[i] if i < len(self.params) else 0

    def evaluate(self, w: int, z: int, i: int) -> bool:
        return w < self.bound(i)

    def in_set(self, i: int) -> Optional[bool]:
        return False

    def total_acts(self, i: int) -> Optional[int]:
        return self.bound(i)

    def to_spec(self) -> dict:
        return {"kind": "threshold", "acts": list(self.params)}
