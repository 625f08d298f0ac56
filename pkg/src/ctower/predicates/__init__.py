"""Predicates R(w, z, i) that drive the stage construction."""

from typing import Dict, Type

from .base import BasePredicate, Limit

__all__ = ["BasePredicate", "Limit", "PREDICATE_REGISTRY"]

# Registry for builtin predicate discovery
PREDICATE_REGISTRY: Dict[str, Type[BasePredicate]] = {}
