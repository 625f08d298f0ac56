"""Finite lookup-table predicates."""

from typing import Dict, Iterable, Optional, Tuple

from ..exceptions import PredicateError
from .base import BasePredicate


class TablePredicate(BasePredicate):
    """R given by explicit (w, z, i) -> bool entries and an optional default.

    Nothing is known about the limit from finitely many entries, so the
    predicted limit is always unknown.
    """

    def __init__(
        self,
        entries: Iterable[Tuple[int, int, int, bool]] = (),
        default: Optional[bool] = None,
    ) -> None:
        super().__init__()
        self.entries: Dict[Tuple[int, int, int], bool] = {}
        for w, z, i, value in entries:
            key = (w, z, i)
            if key in self.entries and self.entries[key] != value:
                raise PredicateError(f"conflicting table entries for (w, z, i) = {key}")
            self.entries[key] = value
        self.default = default

    @property
    def name(self) -> str:
        return "table"

    @property
    def description(self) -> str:
        return f"lookup table with {len(self.entries)} entries"

    def evaluate(self, w: int, z: int, i: int) -> bool:
        value = self.entries.get((w, z, i), self.default)
        if value is None:
            raise PredicateError(f"table has no entry for (w, z, i) = ({w}, {z}, {i}) and no default")
        return value

    def to_spec(self) -> dict:
        return {
            "kind": "table",
            "entries": [[w, z, i, v] for (w, z, i), v in sorted(self.entries.items())],
            "default": self.default,
        }
