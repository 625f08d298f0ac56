"""Stage construction driven by a predicate R(w, z, i), and the unit-set (PID) mode.

Stage n decodes to (i, s) = unpair(n). At s = 0 the prime p_i is split as
x_i^(0) * y_i^(0). At s >= 1, with k the number of marks for i, the
construction acts when some z <= s satisfies R(k, z, i): it localizes at
y_i^(k), which makes p_i an associate of x_i^(k) again, then splits p_i
afresh as x_i^(k+1) * y_i^(k+1).
"""

import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from itertools import combinations
from math import isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from .config import Config
from .exceptions import CTowerError, PredicateError, SelfCheckError
from .predicates.base import BasePredicate, Limit
from .ring.elements import LevelKind, PrimeId, PrimeKind
from .ring.primes import PrimeStatus, TrackedPrime
from .ring.tower import Tower

logger = logging.getLogger(__name__)


def pair(i: int, s: int) -> int:
    """Cantor pairing, strictly increasing in s for fixed i."""
    if i < 0 or s < 0:
        raise ValueError("pair needs naturals")
    return (i + s) * (i + s + 1) // 2 + s


def unpair(n: int) -> Tuple[int, int]:
    if n < 0:
        raise ValueError("unpair needs a natural")
    diagonal = (isqrt(8 * n + 1) - 1) // 2
    s = n - diagonal * (diagonal + 1) // 2
    return diagonal - s, s


class Fate(str, Enum):
    """What a tracked prime becomes in the limit ring."""

    PRIME = "prime"
    UNIT = "unit"
    PRODUCT_OF_TWO_PRIMES = "product_of_two_primes"
    UNKNOWN = "unknown"


@dataclass
class IndexRecord:
    """Bookkeeping for one index i."""

    i: int
    initialized: bool = False
    k: int = 0
    marks: int = 0
    acts: int = 0


@dataclass(frozen=True)
class ActRecord:
    """One act: y_i^(k) localized at ``loc_level``, p_i re-split at ``fac_level``."""

    i: int
    k: int
    loc_level: int
    fac_level: int
    stage: Optional[int] = None


@dataclass(frozen=True)
class StageEvent:
    stage: int
    i: int
    s: int
    action: str
    levels_added: int = 0


@dataclass(frozen=True)
class Violation:
    """A failed stage invariant."""

    check: str
    message: str

    def to_dict(self) -> Dict[str, str]:
        return asdict(self)


@dataclass
class ConstructionState:
    """The tower under construction plus per-index marks and acts."""

    tower: Tower
    records: Dict[int, IndexRecord] = field(default_factory=dict)
    stage: int = 0
    acts: List[ActRecord] = field(default_factory=list)
    trace: List[StageEvent] = field(default_factory=list)

    def record(self, i: int) -> IndexRecord:
        if i not in self.records:
            self.records[i] = IndexRecord(i)
        return self.records[i]

    @property
    def initialized(self) -> List[int]:
        return sorted(i for i, rec in self.records.items() if rec.initialized)

    @classmethod
    def from_tower(cls, tower: Tower) -> "ConstructionState":
        """Re-derive marks and acts from the level chain.

        The stage counter is set to the least value consistent with the
        initializations seen; idle stages leave no trace in the tower.
        """
        state = cls(tower)
        for level in tower.levels[1:]:
            if level.kind is LevelKind.FAC:
                assert level.gen is not None
                i, k = level.gen
                rec = state.record(i)
                rec.initialized = True
                rec.k = max(rec.k, k)
                state.stage = max(state.stage, pair(i, rec.marks) + 1)
            elif level.q is not None and level.q.kind is PrimeKind.GEN_Y:
                i, k = level.q.i, level.q.k or 0
                rec = state.record(i)
                rec.marks += 1
                rec.acts += 1
                state.acts.append(ActRecord(i, k, level.index, level.index + 1))
        return state


def new_state(config: Optional[Config] = None) -> ConstructionState:
    config = config or Config()
    return ConstructionState(Tower(base_prime_window=config.build.base_prime_window))


def run_stage(state: ConstructionState, predicate: BasePredicate) -> ConstructionState:
    """Carry out stage ``state.stage`` and advance the counter."""
    tower = state.tower
    n = state.stage
    i, s = unpair(n)
    before = len(tower)
    rec = state.record(i)
    p = tower.registry.base_prime(i)

    if s == 0:
        tower.extend_factor(p.id, (i, 0))
        rec.initialized = True
        rec.k = 0
        action = "init"
        logger.debug("stage %d: initialized p_%d = %d", n, i, p.value)
    elif not rec.initialized:
        # cannot happen with a pairing that is monotone in s
        action = "skip"
        logger.warning("stage %d: index %d acts before its initialization", n, i)
    else:
        k = rec.marks
        if predicate.witnessed(k, s, i):
            loc = tower.extend_localize(PrimeId.gen_y(i, k))
            fac = tower.extend_factor(p.id, (i, k + 1))
            rec.marks += 1
            rec.acts += 1
            rec.k = k + 1
            state.acts.append(ActRecord(i, k, loc.index, fac.index, n))
            action = "act"
            logger.debug("stage %d: acted for %d, retired y:%d:%d", n, i, i, k)
        else:
            action = "idle"

    state.trace.append(StageEvent(n, i, s, action, len(tower) - before))
    state.stage += 1
    return state


def _check(violations: List[Violation], name: str, ok: bool, message: str) -> None:
    if not ok:
        violations.append(Violation(name, message))


def self_check(state: ConstructionState) -> List[Violation]:
    """Stage invariants at the current top level; violations are returned as data."""
    tower = state.tower
    registry = tower.registry
    top = tower.top_index
    violations: List[Violation] = []

    for i in state.initialized:
        rec = state.records[i]
        try:
            p = registry.element(PrimeId.base(i), top)
            x = registry.element(PrimeId.gen_x(i, rec.k), top)
            y = registry.element(PrimeId.gen_y(i, rec.k), top)
            _check(violations, "factorization", tower.equals(p, tower.mul(x, y)),
                   f"p_{i} != x:{i}:{rec.k} * y:{i}:{rec.k} at level {top}")
            _check(violations, "bookkeeping", rec.marks == rec.acts and rec.k == rec.marks,
                   f"index {i}: k={rec.k}, marks={rec.marks}, acts={rec.acts}")
            _check(violations, "bookkeeping",
                   registry.find(PrimeId.gen_x(i, rec.k + 1)) is None,
                   f"index {i}: generators beyond k={rec.k} exist")
        except CTowerError as e:
            violations.append(Violation("factorization", f"index {i}: {e}"))

    live = registry.live_primes(top)
    for a, b in combinations(live, 2):
        try:
            _check(violations, "associates", not registry.is_associate(a, b, top),
                   f"{a.id} and {b.id} are associates at level {top}")
        except CTowerError as e:
            violations.append(Violation("associates", f"{a.id}, {b.id}: {e}"))

    for act in state.acts:
        level = act.loc_level
        try:
            y = registry.element(PrimeId.gen_y(act.i, act.k), level)
            x = registry.get(PrimeId.gen_x(act.i, act.k))
            p = registry.element(PrimeId.base(act.i), level)
            _check(violations, "act", tower.is_unit(y),
                   f"y:{act.i}:{act.k} is not a unit at level {level}")
            divides = registry.divides(x, p)
            _check(violations, "act", divides,
                   f"x:{act.i}:{act.k} does not divide p_{act.i} at level {level}")
            if divides:
                _check(violations, "act", tower.is_unit(registry.exact_div(x, p)),
                       f"p_{act.i} / x:{act.i}:{act.k} is not a unit at level {level}")
        except CTowerError as e:
            violations.append(Violation("act", f"act for {act.i} at level {level}: {e}"))

    for prime in registry.all():
        if prime.birth_level <= top:
            registry.element(prime.id, top)
    for pid, element in registry.cached_elements(top):
        _check(violations, "canonicity", tower.is_canonical(element),
               f"{pid} is not in canonical form at level {top}")

    last_s: Dict[int, int] = {}
    for event in state.trace:
        previous = last_s.get(event.i)
        expected_first = previous is not None or event.s == 0
        _check(violations, "stage-order", expected_first and (previous is None or event.s > previous),
               f"stage {event.stage}: work for ({event.i}, {event.s}) out of order")
        last_s[event.i] = event.s

    for v in violations:
        logger.warning("self-check %s: %s", v.check, v.message)
    return violations


@dataclass
class IndexStatus:
    """Per-index line of a status report."""

    i: int
    state: str
    k: Optional[int] = None
    acts: int = 0
    retired_units: List[str] = field(default_factory=list)
    predicted_limit: str = Limit.UNKNOWN.value
    is_unit: Optional[bool] = None
    enumerated_at: Optional[int] = None


@dataclass
class StatusReport:
    stages: int
    levels: int
    mode: str = "stage"
    per_i: List[IndexStatus] = field(default_factory=list)
    fates: Dict[str, str] = field(default_factory=dict)
    violations: List[Violation] = field(default_factory=list)

    def index(self, i: int) -> IndexStatus:
        for entry in self.per_i:
            if entry.i == i:
                return entry
        raise KeyError(i)

    @property
    def acts(self) -> List[int]:
        return [entry.acts for entry in self.per_i]


@dataclass
class BuildResult:
    state: ConstructionState
    report: StatusReport

    @property
    def tower(self) -> Tower:
        return self.state.tower


def predicted_fate(state: ConstructionState, predicate: BasePredicate, prime: TrackedPrime) -> Fate:
    """Limit fate of a tracked prime, from the predicate's closed form."""
    pid = prime.id
    member = predicate.in_set(pid.i)
    if member is None:
        return Fate.UNKNOWN
    if pid.kind is PrimeKind.BASE:
        return Fate.PRIME if member else Fate.PRODUCT_OF_TWO_PRIMES
    total = None if member else predicate.total_acts(pid.i)
    if not member and total is None:
        return Fate.UNKNOWN
    terminal = not member and pid.k == total
    if terminal:
        return Fate.PRIME
    if pid.kind is PrimeKind.GEN_Y:
        return Fate.UNIT
    # a nonterminal x ends up an associate of p_i
    return Fate.PRIME if member else Fate.PRODUCT_OF_TWO_PRIMES


def status_report(state: ConstructionState, predicate: Optional[BasePredicate] = None,
                  violations: Sequence[Violation] = ()) -> StatusReport:
    tower = state.tower
    report = StatusReport(stages=state.stage, levels=len(tower), violations=list(violations))
    indices = sorted(state.records)
    for i in indices:
        rec = state.records[i]
        entry = IndexStatus(i=i, state="factored" if rec.initialized else "uninitialized")
        if rec.initialized:
            entry.k = rec.k
            entry.acts = rec.acts
            entry.retired_units = [str(PrimeId.gen_y(i, ell)) for ell in range(rec.k)]
        if predicate is not None:
            entry.predicted_limit = predicate.predicted_limit(i).value
        report.per_i.append(entry)
    if predicate is not None:
        for prime in tower.registry.all():
            report.fates[str(prime.id)] = predicted_fate(state, predicate, prime).value
    return report


def build(predicate: BasePredicate, horizon: int, config: Optional[Config] = None) -> BuildResult:
    """Run stages 0 .. horizon-1, self-checking after each when configured.

    The returned tower is frozen.
    """
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    config = config or Config()
    state = new_state(config)
    violations: List[Violation] = []
    for _ in range(horizon):
        run_stage(state, predicate)
        if config.build.check_every_stage:
            found = self_check(state)
            if found and config.build.fail_fast:
                raise SelfCheckError(f"stage {state.stage - 1}: {found[0].check}: {found[0].message}")
            violations.extend(found)
    logger.info("built %d stages, %d levels, %d acts", horizon, len(state.tower), len(state.acts))
    state.tower.freeze()
    return BuildResult(state, status_report(state, predicate, violations))


def parse_enumeration(text: str) -> List[Tuple[int, int]]:
    """Parse "i@stage,i@stage"."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        i, sep, stage = chunk.partition("@")
        try:
            if not sep:
                raise ValueError
            out.append((int(i), int(stage)))
        except ValueError as e:
            raise PredicateError(f"bad enumeration entry {chunk!r}, expected i@stage") from e
    return out


def build_pid(enumeration: Sequence[Tuple[int, int]], horizon: int,
              config: Optional[Config] = None) -> BuildResult:
    """Localize at p_i at the stage where i is enumerated.

    p_i ends up a unit exactly when i is enumerated before the horizon;
    every other p_j stays a tracked prime.
    """
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    seen_i: Dict[int, int] = {}
    by_stage: Dict[int, int] = {}
    for i, stage in enumeration:
        if i < 0 or stage < 0:
            raise PredicateError(f"negative entry {i}@{stage}")
        if i in seen_i:
            raise PredicateError(f"index {i} enumerated twice")
        if stage in by_stage:
            raise PredicateError(f"stage {stage} enumerates both {by_stage[stage]} and {i}")
        seen_i[i] = stage
        by_stage[stage] = i

    config = config or Config()
    state = new_state(config)
    tower = state.tower
    for n in range(horizon):
        i_enum = by_stage.get(n)
        before = len(tower)
        if i_enum is not None:
            p = tower.registry.base_prime(i_enum)
            if tower.registry.is_prime_at(p, tower.top_index):
                tower.extend_localize(p.id)
                logger.debug("stage %d: %d enumerated, p_%d is now a unit", n, i_enum, i_enum)
        state.trace.append(StageEvent(n, i_enum if i_enum is not None else -1, n,
                                      "localize" if len(tower) > before else "idle",
                                      len(tower) - before))
        state.stage += 1

    report = StatusReport(stages=horizon, levels=len(tower), mode="pid")
    window = range(config.build.base_prime_window)
    for i in sorted(set(window) | set(seen_i)):
        element = tower.registry.element(PrimeId.base(i), tower.top_index)
        unit = tower.is_unit(element)
        stage = seen_i.get(i)
        report.per_i.append(
            IndexStatus(
                i=i,
                state="unit" if unit else "prime",
                is_unit=unit,
                enumerated_at=stage if stage is not None and stage < horizon else None,
            )
        )
    for prime in tower.registry.all():
        status = prime.status_at(tower.top_index)
        report.fates[str(prime.id)] = Fate.UNIT.value if status is PrimeStatus.UNIT else Fate.PRIME.value
    tower.freeze()
    return BuildResult(state, report)
