"""Base class for predicates R(w, z, i) over the naturals.

The construction acts for i while the current mark w satisfies
(∃z ≤ s) R(w, z, i), so i acts infinitely often exactly when i lies in
the set {i : (∀w)(∃z) R(w, z, i)}.
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Optional, Sequence, Tuple


class Limit(str, Enum):
    """Predicted fate of p_i in the limit ring."""

    PRIME = "prime"
    NOT_PRIME = "not_prime"
    UNKNOWN = "unknown"


class BasePredicate(ABC):
    """Abstract base class for predicates."""

    def __init__(self, params: Sequence[int] = ()) -> None:
        self.params: Tuple[int, ...] = tuple(params)

    @property
    @abstractmethod
    def name(self) -> str:
        """Registry name."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        pass

    @abstractmethod
    def evaluate(self, w: int, z: int, i: int) -> bool:
        """R(w, z, i)."""
        pass

    def witnessed(self, w: int, s: int, i: int) -> bool:
        """(∃z ≤ s) R(w, z, i)."""
        return any(self.evaluate(w, z, i) for z in range(s + 1))

    def in_set(self, i: int) -> Optional[bool]:
        """Whether (∀w)(∃z) R(w, z, i) holds, when known in closed form."""
        return None

    def total_acts(self, i: int) -> Optional[int]:
        """How often i acts over the whole construction, when finite and known."""
        return None

    def predicted_limit(self, i: int) -> Limit:
        member = self.in_set(i)
        if member is None:
            return Limit.UNKNOWN
        return Limit.PRIME if member else Limit.NOT_PRIME

    def to_spec(self) -> dict:
        return {"kind": "builtin", "name": self.name, "params": list(self.params)}

    def __repr__(self) -> str:
        return f"{type(self).__name__}(params={list(self.params)})"


def register_predicate(predicate_class: type) -> type:
    """Decorator to register a builtin predicate class."""
    from . import PREDICATE_REGISTRY

    if not issubclass(predicate_class, BasePredicate):
        raise ValueError(f"Predicate {predicate_class} must inherit from BasePredicate")

    # Create a temporary instance to get the name
    temp_instance = predicate_class()
    PREDICATE_REGISTRY[temp_instance.name] = predicate_class
    return predicate_class
