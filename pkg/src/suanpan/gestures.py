"""Atomic gestures on the abacus and their replay.

The virtual abacus is operated by clicking beads: clicking an inactive bead
activates it together with every bead between it and the beam, clicking an
active bead retracts it and every bead beyond it. Bead indices count
outward from the beam, starting at 1. The material abacus is operated by
moves: one hand motion pushes a contiguous run of beads, possibly spanning
both parts of a rod in a single gesture, which the virtual software cannot
do. Software icons exist only on the virtual abacus.

Register legality:

====================  =======  ========
gesture               virtual  material
====================  =======  ========
ClickLower/ClickUpper   yes       no
MoveLower/MoveUpper     no        yes
CompoundMove            no        yes
ExchangeFive            yes       yes
Icon*                   yes       no
====================  =======  ========

The worksheet, fingers and oral registers carry no abacus gestures at all.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields

from .core import (
    LOWER_BEADS,
    UPPER_BEADS,
    AbacusConfig,
    exchange_five_units,
    normalize,
    rod_state,
)
from .errors import IllegalGestureForRegister, OutOfRange, UnreplayableTrace


class Register(enum.Enum):
    VIRTUAL_ABACUS = "virtual_abacus"
    MATERIAL_ABACUS = "material_abacus"
    WORKSHEET = "worksheet"
    FINGERS = "fingers"
    ORAL = "oral"


@dataclass(frozen=True)
class ClickLower:
    rod: int
    index: int  # 1..5, counted outward from the beam
    t: int | None = None  # optional ms since attempt start

    def __post_init__(self):
        if not 1 <= self.index <= LOWER_BEADS:
            raise ValueError(f"lower bead index {self.index} outside 1..{LOWER_BEADS}")


@dataclass(frozen=True)
class ClickUpper:
    rod: int
    index: int  # 1..2
    t: int | None = None

    def __post_init__(self):
        if not 1 <= self.index <= UPPER_BEADS:
            raise ValueError(f"upper bead index {self.index} outside 1..{UPPER_BEADS}")


@dataclass(frozen=True)
class MoveLower:
    rod: int
    delta: int  # -5..+5, nonzero
    t: int | None = None

    def __post_init__(self):
        if self.delta == 0 or not -LOWER_BEADS <= self.delta <= LOWER_BEADS:
            raise ValueError(f"lower move delta {self.delta} outside nonzero -5..+5")


@dataclass(frozen=True)
class MoveUpper:
    rod: int
    delta: int  # -2..+2, nonzero
    t: int | None = None

    def __post_init__(self):
        if self.delta == 0 or not -UPPER_BEADS <= self.delta <= UPPER_BEADS:
            raise ValueError(f"upper move delta {self.delta} outside nonzero -2..+2")


@dataclass(frozen=True)
class CompoundMove:
    """One hand motion moving both parts of one rod."""

    rod: int
    lower_delta: int
    upper_delta: int
    t: int | None = None

    def __post_init__(self):
        if self.lower_delta == 0 or self.upper_delta == 0:
            raise ValueError("a compound move spans both parts of the rod")
        if not -LOWER_BEADS <= self.lower_delta <= LOWER_BEADS:
            raise ValueError(f"lower delta {self.lower_delta} outside -5..+5")
        if not -UPPER_BEADS <= self.upper_delta <= UPPER_BEADS:
            raise ValueError(f"upper delta {self.upper_delta} outside -2..+2")


@dataclass(frozen=True)
class ExchangeFive:
    rod: int
    t: int | None = None


@dataclass(frozen=True)
class IconSetZero:
    t: int | None = None


@dataclass(frozen=True)
class IconPositioning:
    t: int | None = None


@dataclass(frozen=True)
class IconSeeNumber:
    on: bool = True
    t: int | None = None


Gesture = (
    ClickLower
    | ClickUpper
    | MoveLower
    | MoveUpper
    | CompoundMove
    | ExchangeFive
    | IconSetZero
    | IconPositioning
    | IconSeeNumber
)

_CLICKS = (ClickLower, ClickUpper)
_MOVES = (MoveLower, MoveUpper, CompoundMove)
_ICONS = (IconSetZero, IconPositioning, IconSeeNumber)

_GESTURE_TYPES: dict[str, type] = {
    "click_lower": ClickLower,
    "click_upper": ClickUpper,
    "move_lower": MoveLower,
    "move_upper": MoveUpper,
    "compound_move": CompoundMove,
    "exchange_five": ExchangeFive,
    "icon_set_zero": IconSetZero,
    "icon_positioning": IconPositioning,
    "icon_see_number": IconSeeNumber,
}
_TYPE_NAMES = {cls: name for name, cls in _GESTURE_TYPES.items()}


def gesture_to_json(gesture: Gesture) -> dict:
    data = {"type": _TYPE_NAMES[type(gesture)]}
    for f in fields(gesture):
        value = getattr(gesture, f.name)
        if f.name == "t" and value is None:
            continue
        data[f.name] = value
    return data


def gesture_from_json(data: dict) -> Gesture:
    if not isinstance(data, dict) or "type" not in data:
        raise ValueError('each gesture needs a "type" discriminator')
    kind = data["type"]
    if kind not in _GESTURE_TYPES:
        raise ValueError(f"unknown gesture type {kind!r}")
    cls = _GESTURE_TYPES[kind]
    kwargs = {f.name: data[f.name] for f in fields(cls) if f.name in data}
    return cls(**kwargs)


@dataclass(frozen=True)
class Trace:
    """One attempt's ordered gesture record."""

    register: Register
    gestures: tuple[Gesture, ...] = ()
    target: int | None = None  # the number to set, when the task is one
    see_number_initially_on: bool = False

    def to_json(self) -> dict:
        data: dict = {
            "register": self.register.value,
            "gestures": [gesture_to_json(g) for g in self.gestures],
        }
        if self.target is not None:
            data["target"] = self.target
        if self.see_number_initially_on:
            data["see_number_initially_on"] = True
        return data

    @classmethod
    def from_json(cls, data) -> "Trace":
        # Trace files may be bare JSON arrays of gestures; the register is
        # then inferred from the gesture kinds (moves mean material).
        if isinstance(data, list):
            gestures = tuple(gesture_from_json(g) for g in data)
            material = any(isinstance(g, _MOVES) for g in gestures)
            register = Register.MATERIAL_ABACUS if material else Register.VIRTUAL_ABACUS
            return cls(register=register, gestures=gestures)
        if not isinstance(data, dict):
            raise ValueError("a trace is a JSON object or a JSON array of gestures")
        gestures = tuple(gesture_from_json(g) for g in data.get("gestures", []))
        register = Register(data.get("register", Register.VIRTUAL_ABACUS.value))
        target = data.get("target")
        return cls(
            register=register,
            gestures=gestures,
            target=int(target) if target is not None else None,
            see_number_initially_on=bool(data.get("see_number_initially_on", False)),
        )


def _check_rod(config: AbacusConfig, rod: int) -> None:
    if not 0 <= rod < config.rod_count:
        raise OutOfRange(f"rod {rod} outside 0..{config.rod_count - 1}")


def _click(current: int, index: int) -> int:
    # Toggle-run rule: an inactive bead pulls in everything up to itself,
    # an active bead pushes out itself and everything beyond.
    return index if index > current else index - 1


def apply(config: AbacusConfig, gesture: Gesture, register: Register) -> AbacusConfig:
    """One gesture applied to one configuration; pure."""
    if isinstance(gesture, _CLICKS) and register is not Register.VIRTUAL_ABACUS:
        raise IllegalGestureForRegister(f"clicks need the virtual abacus, not {register.value}")
    if isinstance(gesture, _MOVES) and register is not Register.MATERIAL_ABACUS:
        raise IllegalGestureForRegister(f"moves need the material abacus, not {register.value}")
    if isinstance(gesture, _ICONS) and register is not Register.VIRTUAL_ABACUS:
        raise IllegalGestureForRegister(f"icons exist only on the virtual abacus, not {register.value}")
    if isinstance(gesture, ExchangeFive) and register not in (
        Register.VIRTUAL_ABACUS,
        Register.MATERIAL_ABACUS,
    ):
        raise IllegalGestureForRegister(f"exchanges need an abacus register, not {register.value}")

    if isinstance(gesture, IconSeeNumber):
        return config  # display state only
    if isinstance(gesture, IconSetZero):
        return AbacusConfig.zeros(config.rod_count)
    if isinstance(gesture, IconPositioning):
        return normalize(config)
    if isinstance(gesture, ExchangeFive):
        _check_rod(config, gesture.rod)
        return exchange_five_units(config, gesture.rod)

    _check_rod(config, gesture.rod)
    state = config.rods[gesture.rod]
    if isinstance(gesture, ClickLower):
        return config.with_rod(gesture.rod, rod_state(_click(state.lower, gesture.index), state.upper))
    if isinstance(gesture, ClickUpper):
        return config.with_rod(gesture.rod, rod_state(state.lower, _click(state.upper, gesture.index)))

    if isinstance(gesture, MoveLower):
        lower, upper = state.lower + gesture.delta, state.upper
    elif isinstance(gesture, MoveUpper):
        lower, upper = state.lower, state.upper + gesture.delta
    else:  # CompoundMove
        lower = state.lower + gesture.lower_delta
        upper = state.upper + gesture.upper_delta
    if not 0 <= lower <= LOWER_BEADS or not 0 <= upper <= UPPER_BEADS:
        raise OutOfRange(
            f"move leaves rod {gesture.rod} at lower={lower}, upper={upper}, outside the bead bounds"
        )
    return config.with_rod(gesture.rod, rod_state(lower, upper))


@dataclass(frozen=True)
class ReplayResult:
    final: AbacusConfig
    steps: tuple[AbacusConfig, ...]  # config after each gesture


def replay(trace: Trace, initial: AbacusConfig) -> ReplayResult:
    """Left fold of ``apply`` over the trace, keeping per-step configs.

    The first illegal gesture aborts with its step index.
    """
    config = initial
    steps = []
    for i, gesture in enumerate(trace.gestures):
        try:
            config = apply(config, gesture, trace.register)
        except Exception as exc:
            raise UnreplayableTrace(step=i, cause=exc) from exc
        steps.append(config)
    return ReplayResult(final=config, steps=tuple(steps))


def gesture_count(trace: Trace) -> int:
    """Bead gestures only; icon uses are software actions, not gestures."""
    return sum(1 for g in trace.gestures if not isinstance(g, _ICONS))
