"""Interpreter recursion headroom for operations that descend the tower.

Arithmetic and the tracked-prime oracles recurse once per level, so tall
towers need more frames than the interpreter default. The limit is raised
only for the outermost such call and restored when it returns.
"""

import sys
from contextlib import contextmanager
from functools import wraps
from typing import Any, Callable, Iterator, TypeVar

# frames needed per level by the deepest recursive operations
FRAMES_PER_LEVEL = 40
BASE_FRAMES = 1000

F = TypeVar("F", bound=Callable[..., Any])


def frames_needed(levels: int) -> int:
    return BASE_FRAMES + FRAMES_PER_LEVEL * levels


@contextmanager
def headroom(levels: int) -> Iterator[None]:
    """Recursion limit large enough for a tower of ``levels`` levels."""
    previous = sys.getrecursionlimit()
    needed = frames_needed(levels)
    if previous >= needed:
        yield
        return
    sys.setrecursionlimit(needed)
    try:
        yield
    finally:
        sys.setrecursionlimit(previous)


def deep(method: F) -> F:
    """Run a Tower or PrimeRegistry method under :func:`headroom`."""

    @wraps(method)
    def wrapper(self: Any, *args: Any, **kwargs: Any) -> Any:
        levels = len(getattr(self, "tower", self))
        if sys.getrecursionlimit() >= frames_needed(levels):
            return method(self, *args, **kwargs)
        with headroom(levels):
            return method(self, *args, **kwargs)

    return wrapper  # type: ignore[return-value]
