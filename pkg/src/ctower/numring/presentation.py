"""Computable presentations of rings of integers by an integral basis.

A presentation of rank n is the table of basis products: ``table[i][j]``
holds the coordinates of ``b_i * b_j``. The first basis element must be 1.
"""

import json
import logging
from dataclasses import dataclass
from importlib import resources
from itertools import product
from pathlib import Path
from typing import Any, List, Sequence, Tuple, Union

from sympy import Matrix

from ..exceptions import PresentationError
from ..schemas import PRESENTATION_SCHEMA, validate

logger = logging.getLogger(__name__)

AlgInt = Tuple[int, ...]
Table = Tuple[Tuple[AlgInt, ...], ...]


@dataclass(frozen=True)
class NumberRingPresentation:
    """Rank and multiplication table of an integral basis."""

    n: int
    table: Table
    name: str = ""

    def element(self, coords: Sequence[int]) -> AlgInt:
        """Validate a coordinate vector of this rank."""
        if len(coords) != self.n:
            raise PresentationError(f"expected {self.n} coordinates, got {len(coords)}")
        if any(isinstance(c, bool) or not isinstance(c, int) for c in coords):
            raise PresentationError(f"coordinates must be integers: {list(coords)}")
        return tuple(coords)

    def integer(self, m: int) -> AlgInt:
        return (m,) + (0,) * (self.n - 1)

    @property
    def one(self) -> AlgInt:
        return self.integer(1)

    @property
    def zero(self) -> AlgInt:
        return self.integer(0)

    def basis(self, i: int) -> AlgInt:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def parse_element(self, data: Any) -> AlgInt:
        """An integer (image of Z) or a coordinate array."""
        if isinstance(data, int) and not isinstance(data, bool):
            return self.integer(data)
        if isinstance(data, list):
            return self.element(data)
        raise PresentationError(f"element must be an integer or an integer array, got {data!r}")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "table": [[list(cell) for cell in row] for row in self.table],
        }


def basis_mul(n: int, table: Table, a: AlgInt, b: AlgInt) -> AlgInt:
    out = [0] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj:
                continue
            cell = table[i][j]
            for k in range(n):
                out[k] += ai * bj * cell[k]
    return tuple(out)


def load_presentation(raw: Any, name: str = "") -> NumberRingPresentation:
    """Validate a raw presentation, naming the first axiom that fails."""
    validate(raw, PRESENTATION_SCHEMA, "presentation")
    n = raw["n"]
    rows = raw["table"]
    if len(rows) != n or any(len(row) != n for row in rows):
        raise PresentationError(f"table must be {n} x {n}")
    if any(len(cell) != n for row in rows for cell in row):
        raise PresentationError(f"every table entry must have {n} coordinates")
    table: Table = tuple(tuple(tuple(cell) for cell in row) for row in rows)
    basis = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]

    for i in range(n):
        if table[0][i] != basis[i] or table[i][0] != basis[i]:
            raise PresentationError(
                f"first basis element is not the identity: b_1 * b_{i + 1} = "
                f"{list(table[0][i])}, b_{i + 1} * b_1 = {list(table[i][0])}"
            )
    for i, j in product(range(n), repeat=2):
        if table[i][j] != table[j][i]:
            raise PresentationError(f"not commutative: b_{i + 1} * b_{j + 1} != b_{j + 1} * b_{i + 1}")
    for i, j, k in product(range(n), repeat=3):
        left = basis_mul(n, table, table[i][j], basis[k])
        right = basis_mul(n, table, basis[i], table[j][k])
        if left != right:
            raise PresentationError(
                f"not associative on (b_{i + 1}, b_{j + 1}, b_{k + 1})"
            )
    for i in range(n):
        # column j of M_{b_i} is b_i * b_j
        if Matrix(n, n, lambda r, j: table[i][j][r]).det() == 0:
            raise PresentationError(
                f"presentation is not an integral domain: b_{i + 1} is a zero divisor"
            )
    presentation = NumberRingPresentation(n=n, table=table, name=name or raw.get("name", ""))
    logger.debug("loaded presentation %s of rank %d", presentation.name or "<unnamed>", n)
    return presentation


def list_bundled() -> List[str]:
    data = resources.files("ctower.numring").joinpath("data")
    return sorted(entry.name[: -len(".json")] for entry in data.iterdir() if entry.name.endswith(".json"))


def load_bundled(name: str) -> NumberRingPresentation:
    resource = resources.files("ctower.numring").joinpath("data").joinpath(f"{name}.json")
    if not resource.is_file():
        raise PresentationError(
            f"no bundled presentation {name!r}; available: {', '.join(list_bundled())}"
        )
    return load_presentation(json.loads(resource.read_text(encoding="utf-8")), name=name)


def load_presentation_file(source: Union[str, Path]) -> NumberRingPresentation:
    """Load from a JSON file, or by bundled name ("zsqrt7", "zsqrt7.json", ...)."""
    path = Path(source)
    if path.is_file():
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise PresentationError(f"{path} is not JSON: {e}") from e
        return load_presentation(raw, name=path.stem)
    name = path.name[: -len(".json")] if path.name.endswith(".json") else path.name
    return load_bundled(name)
