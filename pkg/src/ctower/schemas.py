"""JSON schemas for the files ctower reads, checked with jsonschema."""

from typing import Any, Dict

import jsonschema

from .exceptions import CTowerError

PRIME_ID_PATTERN = r"^(p:\d+|[xy]:\d+:\d+)$"

TOWER_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "array",
    "minItems": 1,
    "items": {
        "type": "object",
        "required": ["index", "kind"],
        "additionalProperties": False,
        "properties": {
            "index": {"type": "integer", "minimum": 0},
            "kind": {"enum": ["base", "loc", "fac"]},
            "parent": {"type": ["integer", "null"], "minimum": 0},
            "q": {"type": ["string", "null"], "pattern": PRIME_ID_PATTERN},
            "gen": {
                "type": ["array", "null"],
                "items": {"type": "integer", "minimum": 0},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
}

PREDICATE_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["kind"],
    "oneOf": [
        {
            "properties": {
                "kind": {"const": "builtin"},
                "name": {"type": "string"},
                "params": {"type": "array", "items": {"type": "integer"}},
            },
            "required": ["kind", "name"],
            "additionalProperties": False,
        },
        {
            "properties": {
                "kind": {"const": "threshold"},
                "acts": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            },
            "required": ["kind", "acts"],
            "additionalProperties": False,
        },
        {
            "properties": {
                "kind": {"const": "table"},
                "entries": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "minItems": 4,
                        "maxItems": 4,
                        "items": [
                            {"type": "integer", "minimum": 0},
                            {"type": "integer", "minimum": 0},
                            {"type": "integer", "minimum": 0},
                            {"type": "boolean"},
                        ],
                    },
                },
                "default": {"type": ["boolean", "null"]},
            },
            "required": ["kind", "entries"],
            "additionalProperties": False,
        },
    ],
}

PRESENTATION_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["n", "table"],
    "properties": {
        "name": {"type": "string"},
        "description": {"type": "string"},
        "n": {"type": "integer", "minimum": 1},
        "table": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer"}},
            },
        },
    },
}


class SchemaValidationError(CTowerError):
    """A file does not match its JSON schema."""


def validate(data: Any, schema: Dict[str, Any], what: str) -> None:
    """Validate ``data`` against ``schema``, naming ``what`` in the error."""
    try:
        jsonschema.validate(instance=data, schema=schema)
    except jsonschema.ValidationError as e:
        location = "/".join(str(part) for part in e.absolute_path) or "<root>"
        raise SchemaValidationError(f"invalid {what} at {location}: {e.message}") from e
