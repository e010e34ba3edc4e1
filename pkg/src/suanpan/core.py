"""Bead-state model of the Chinese abacus (suan-pan).

A rod carries five one-unit counters below the beam and two five-unit
counters above it; activated counters sit against the beam, so per part the
state is just a count. Rod k weighs 10**k, rod 0 being the rightmost
(units) rod. Many bead configurations ("inscriptions") can encode the same
number; the canonical one activates the fewest beads and is what the
software's "positioning" icon produces.

Everything here is an immutable value and every operation is a pure
function, so the module is thread-safe without locks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ExchangeUnavailable, Overflow

LOWER_BEADS = 5
UPPER_BEADS = 2
MAX_ROD_VALUE = LOWER_BEADS + 5 * UPPER_BEADS  # 15

DEFAULT_ROD_COUNT = 6


@dataclass(frozen=True)
class RodState:
    """Activated counters on one rod: ``lower`` ones, ``upper`` fives."""

    lower: int = 0
    upper: int = 0

    def __post_init__(self):
        if not 0 <= self.lower <= LOWER_BEADS:
            raise ValueError(f"lower counter count {self.lower} outside 0..{LOWER_BEADS}")
        if not 0 <= self.upper <= UPPER_BEADS:
            raise ValueError(f"upper counter count {self.upper} outside 0..{UPPER_BEADS}")

    @property
    def value(self) -> int:
        return self.lower + 5 * self.upper

    @property
    def beads(self) -> int:
        return self.lower + self.upper


# The 18 possible rod states, shared so bulk constructions stay cheap.
_ROD = {(lo, up): RodState(lo, up) for lo in range(LOWER_BEADS + 1) for up in range(UPPER_BEADS + 1)}
_ECONOMICAL_ROD = {d: _ROD[(d % 5, d // 5)] for d in range(10)}
ZERO_ROD = _ROD[(0, 0)]


def rod_state(lower: int, upper: int) -> RodState:
    """Validated, interned rod state."""
    key = (lower, upper)
    if key not in _ROD:
        RodState(lower, upper)  # raises with the precise message
    return _ROD[key]


@dataclass(frozen=True)
class AbacusConfig:
    """Full bead state; ``rods[0]`` is the units rod, ``rods[k]`` weighs 10**k."""

    rods: tuple[RodState, ...]

    def __post_init__(self):
        if not self.rods:
            raise ValueError("an abacus needs at least one rod")

    @property
    def rod_count(self) -> int:
        return len(self.rods)

    @classmethod
    def zeros(cls, rod_count: int = DEFAULT_ROD_COUNT) -> "AbacusConfig":
        if rod_count < 1:
            raise ValueError("rod_count must be >= 1")
        return cls(rods=(ZERO_ROD,) * rod_count)

    @classmethod
    def of(cls, *rods: tuple[int, int]) -> "AbacusConfig":
        """Build from (lower, upper) pairs, units first.

        ``AbacusConfig.of((0, 1), (2, 0))`` is 25 with one five-unit counter
        on the units rod and two one-unit counters on the tens rod.
        """
        return cls(rods=tuple(rod_state(lo, up) for lo, up in rods))

    def with_rod(self, index: int, rod: RodState) -> "AbacusConfig":
        if not 0 <= index < len(self.rods):
            raise ValueError(f"rod index {index} outside 0..{len(self.rods) - 1}")
        rods = list(self.rods)
        rods[index] = rod
        return AbacusConfig(rods=tuple(rods))

    def to_json(self) -> dict:
        return {"rods": [{"lower": r.lower, "upper": r.upper} for r in self.rods]}

    @classmethod
    def from_json(cls, data: dict) -> "AbacusConfig":
        if not isinstance(data, dict) or "rods" not in data:
            raise ValueError('config JSON must be {"rods": [{"lower": .., "upper": ..}, ..]}')
        rods = []
        for entry in data["rods"]:
            if not isinstance(entry, dict):
                raise ValueError("each rod must be an object with lower/upper counts")
            rods.append(rod_state(int(entry.get("lower", 0)), int(entry.get("upper", 0))))
        return cls(rods=tuple(rods))


def read_value(config: AbacusConfig) -> int:
    """The number an inscription encodes: sum of rod values times 10**k."""
    total = 0
    for k, rod in enumerate(config.rods):
        total += rod.value * 10**k
    return total


def bead_count(config: AbacusConfig) -> int:
    """How many counters are activated in total."""
    return sum(rod.beads for rod in config.rods)


def set_economical(n: int, rod_count: int = DEFAULT_ROD_COUNT) -> AbacusConfig:
    """The inscription of ``n`` that moves the fewest beads.

    Digit-wise canonical form: rod k holds digit d as d//5 five-unit and
    d%5 one-unit counters. Raises Overflow when n needs more rods.
    """
    if n < 0:
        raise ValueError("n must be a natural number")
    if rod_count < 1:
        raise ValueError("rod_count must be >= 1")
    if n >= 10**rod_count:
        raise Overflow(f"{n} does not fit on {rod_count} rod(s)")
    rods = []
    rest = n
    for _ in range(rod_count):
        rest, digit = divmod(rest, 10)
        rods.append(_ECONOMICAL_ROD[digit])
    return AbacusConfig(rods=tuple(rods))


def normalize(config: AbacusConfig) -> AbacusConfig:
    """Rewrite any inscription into the economical one (the "positioning" icon).

    Raises Overflow when the value needs more rods than the abacus has,
    e.g. rod value 15 on the leftmost rod.
    """
    return set_economical(read_value(config), config.rod_count)


def _rod_realizations(value: int) -> list[RodState]:
    """All (lower, upper) splits of one rod value 0..15."""
    states = []
    for upper in range(UPPER_BEADS + 1):
        lower = value - 5 * upper
        if 0 <= lower <= LOWER_BEADS:
            states.append(_ROD[(lower, upper)])
    return states


def iter_inscriptions(n: int, rod_count: int) -> Iterator[AbacusConfig]:
    """Lazily yield every inscription of ``n`` on ``rod_count`` rods.

    Yields nothing when n is not expressible as sum(v_k * 10**k) with rod
    values v_k in 0..15.
    """
    if n < 0:
        raise ValueError("n must be a natural number")
    if rod_count < 1:
        raise ValueError("rod_count must be >= 1")

    def rec(remaining: int, rods_left: int) -> Iterator[tuple[RodState, ...]]:
        if rods_left == 0:
            if remaining == 0:
                yield ()
            return
        digit = remaining % 10
        for v in (digit, digit + 10):
            if v > MAX_ROD_VALUE or v > remaining:
                continue
            for rest in rec((remaining - v) // 10, rods_left - 1):
                for rod in _rod_realizations(v):
                    yield (rod,) + rest

    for rods in rec(n, rod_count):
        yield AbacusConfig(rods=rods)


def enumerate_inscriptions(n: int, rod_count: int) -> list[AbacusConfig]:
    """Every inscription of ``n``, in a deterministic order; empty when none."""
    return list(iter_inscriptions(n, rod_count))


def exchange_five_units(config: AbacusConfig, rod: int) -> AbacusConfig:
    """Swap five one-unit counters for one five-unit counter on a rod."""
    state = config.rods[rod]
    if state.lower != LOWER_BEADS:
        raise ExchangeUnavailable(f"rod {rod} has {state.lower} one-unit counters, needs {LOWER_BEADS}")
    if state.upper >= UPPER_BEADS:
        raise ExchangeUnavailable(f"rod {rod} has no free five-unit counter")
    return config.with_rod(rod, _ROD[(state.lower - 5, state.upper + 1)])


def exchange_to_next_rod(config: AbacusConfig, rod: int) -> AbacusConfig:
    """Swap two five-unit counters for one one-unit counter on the next rod."""
    state = config.rods[rod]
    if state.upper != UPPER_BEADS:
        raise ExchangeUnavailable(f"rod {rod} has {state.upper} five-unit counters, needs {UPPER_BEADS}")
    if rod + 1 >= config.rod_count:
        raise ExchangeUnavailable(f"rod {rod} is the leftmost rod")
    above = config.rods[rod + 1]
    if above.lower >= LOWER_BEADS:
        raise ExchangeUnavailable(f"rod {rod + 1} has no free one-unit counter")
    out = config.with_rod(rod, _ROD[(state.lower, 0)])
    return out.with_rod(rod + 1, _ROD[(above.lower + 1, above.upper)])
