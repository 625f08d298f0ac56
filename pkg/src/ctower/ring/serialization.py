"""JSON encoding of towers and elements.

A tower is the array of its level records; loading replays the extensions,
so the registry and every oracle are rebuilt exactly. Elements encode as
nested tagged terms:

* base: a bare integer
* localization: ``{"plain": e}`` or ``{"num": e, "k": k}``
* factorization: ``{"xs": [[m, e], ...], "c": e, "ys": [[n, e], ...]}``
"""

import json
import logging
from typing import Any, Dict, List

from ..exceptions import CTowerError, SerializationError
from ..schemas import TOWER_SCHEMA, validate
from .elements import FacElement, Frac, Integer, LevelKind, Plain, PrimeId, RingElement
from .tower import Tower

logger = logging.getLogger(__name__)


def level_records(tower: Tower) -> List[Dict[str, Any]]:
    records = []
    for level in tower.levels:
        records.append(
            {
                "index": level.index,
                "kind": level.kind.value,
                "parent": level.parent,
                "q": str(level.q) if level.q is not None else None,
                "gen": list(level.gen) if level.gen is not None else None,
            }
        )
    return records


def dumps_tower(tower: Tower) -> str:
    return json.dumps(level_records(tower), indent=2)


def load_tower(records: Any, base_prime_window: int = 0) -> Tower:
    """Rebuild a tower by replaying its level records."""
    validate(records, TOWER_SCHEMA, "tower file")
    tower = Tower(base_prime_window=base_prime_window)
    for position, record in enumerate(records):
        kind = LevelKind(record["kind"])
        if record["index"] != position:
            raise SerializationError(f"level record {position} has index {record['index']}")
        if position == 0:
            if kind is not LevelKind.BASE:
                raise SerializationError("level 0 must be the base level")
            continue
        if kind is LevelKind.BASE:
            raise SerializationError(f"level {position}: only level 0 can be the base")
        if record.get("parent") != position - 1:
            raise SerializationError(f"level {position}: parent must be {position - 1}")
        if record.get("q") is None:
            raise SerializationError(f"level {position}: missing q")
        q = PrimeId.parse(record["q"])
        try:
            if kind is LevelKind.LOC:
                tower.extend_localize(q)
            else:
                gen = record.get("gen")
                if gen is None:
                    raise SerializationError(f"level {position}: missing gen")
                tower.extend_factor(q, (gen[0], gen[1]))
        except SerializationError:
            raise
        except CTowerError as e:
            raise SerializationError(f"level {position}: {e}") from e
    logger.debug("loaded tower with %d levels", len(tower))
    return tower


def loads_tower(text: str, base_prime_window: int = 0) -> Tower:
    try:
        records = json.loads(text)
    except json.JSONDecodeError as e:
        raise SerializationError(f"tower file is not JSON: {e}") from e
    return load_tower(records, base_prime_window)


def element_to_json(e: RingElement) -> Any:
    if isinstance(e, Integer):
        return e.value
    if isinstance(e, Plain):
        return {"plain": element_to_json(e.value)}
    if isinstance(e, Frac):
        return {"num": element_to_json(e.num), "k": e.k}
    if isinstance(e, FacElement):
        return {
            "xs": [[m, element_to_json(a)] for m, a in e.xs],
            "c": element_to_json(e.c),
            "ys": [[n, element_to_json(b)] for n, b in e.ys],
        }
    raise SerializationError(f"cannot encode {e!r}")


def element_from_json(tower: Tower, data: Any, level: int) -> RingElement:
    """Decode an element of ``level``; the result must be canonical."""
    element = _decode(tower, data, level)
    if not tower.is_canonical(element):
        raise SerializationError(f"element is not in canonical form at level {level}")
    return element


def _decode(tower: Tower, data: Any, level: int) -> RingElement:
    descriptor = tower.level(level)
    if descriptor.kind is LevelKind.BASE:
        if isinstance(data, bool) or not isinstance(data, int):
            raise SerializationError(f"base element must be an integer, got {data!r}")
        return Integer(0, data)
    parent: int = descriptor.parent  # type: ignore[assignment]
    if not isinstance(data, dict):
        raise SerializationError(f"level {level} element must be an object, got {data!r}")
    if descriptor.kind is LevelKind.LOC:
        if set(data) == {"plain"}:
            return Plain(level, _decode(tower, data["plain"], parent))
        if set(data) == {"num", "k"} and isinstance(data["k"], int):
            return Frac(level, _decode(tower, data["num"], parent), data["k"])
        raise SerializationError(f"bad localization element {data!r}")
    if set(data) != {"xs", "c", "ys"}:
        raise SerializationError(f"bad factorization element {data!r}")
    try:
        xs = tuple((int(m), _decode(tower, a, parent)) for m, a in data["xs"])
        ys = tuple((int(n), _decode(tower, b, parent)) for n, b in data["ys"])
    except (TypeError, ValueError) as e:
        raise SerializationError(f"bad term list in {data!r}") from e
    return FacElement(level, xs, _decode(tower, data["c"], parent), ys)
