"""Wire model for predicate specifications."""

import json
from pathlib import Path
from typing import Any, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..exceptions import PredicateError
from ..schemas import PREDICATE_SCHEMA, validate


class PredicateSpec(BaseModel):
    """{"kind": "builtin", "name": ...} | {"kind": "threshold", "acts": [...]} |
    {"kind": "table", "entries": [[w, z, i, bool], ...], "default": bool | null}
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["builtin", "threshold", "table"]
    name: Optional[str] = None
    params: List[int] = Field(default_factory=list)
    acts: List[int] = Field(default_factory=list)
    entries: List[Tuple[int, int, int, bool]] = Field(default_factory=list)
    default: Optional[bool] = None

    @model_validator(mode="after")
    def check_kind_fields(self) -> "PredicateSpec":
        if self.kind == "builtin" and not self.name:
            raise ValueError("builtin predicate needs a name")
        if self.kind != "builtin" and (self.name or self.params):
            raise ValueError(f"{self.kind} predicate takes no name or params")
        if self.kind != "threshold" and self.acts:
            raise ValueError("acts only applies to threshold predicates")
        if self.kind != "table" and (self.entries or self.default is not None):
            raise ValueError("entries/default only apply to table predicates")
        if any(a < 0 for a in self.acts + self.params):
            raise ValueError("acts and params must be nonnegative")
        for w, z, i, _ in self.entries:
            if min(w, z, i) < 0:
                raise ValueError("table indices must be nonnegative")
        return self

    @classmethod
    def from_data(cls, data: Any) -> "PredicateSpec":
        validate(data, PREDICATE_SCHEMA, "predicate")
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            raise PredicateError(f"invalid predicate: {e}") from e

    @classmethod
    def parse(cls, source: Union[str, Path]) -> "PredicateSpec":
        """A JSON file, inline JSON, a builtin name, or "threshold:2,0,1"."""
        text = str(source).strip()
        path = Path(text)
        if path.is_file():
            try:
                return cls.from_data(json.loads(path.read_text(encoding="utf-8")))
            except json.JSONDecodeError as e:
                raise PredicateError(f"{path} is not JSON: {e}") from e
        if text.startswith("{"):
            try:
                return cls.from_data(json.loads(text))
            except json.JSONDecodeError as e:
                raise PredicateError(f"inline predicate is not JSON: {e}") from e
        name, _, params = text.partition(":")
        try:
            numbers = [int(part) for part in params.split(",") if part.strip()]
        except ValueError as e:
            raise PredicateError(f"bad predicate parameters in {text!r}") from e
        if name == "threshold":
            return cls.from_data({"kind": "threshold", "acts": numbers})
        return cls.from_data({"kind": "builtin", "name": name, "params": numbers})
