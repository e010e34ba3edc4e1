"""The finger register: two hands, ten fingers, many cultures.

Showing a number on two hands is itself a decomposition (three can be 0+3
or 1+2), and which fingers rise is cultural: France counts from the thumb,
the chambaa build numbers from pairs (seven is (2+2)+3), the makonde fold
fingers from the little finger up to four.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRange, UnsupportedValue
from .terms import Atom, Group, Term

FINGERS_PER_HAND = 5

# finger_mask positions, per hand, palm toward you
FINGER_ORDER = ("thumb", "index", "middle", "ring", "little")


@dataclass(frozen=True)
class HandShape:
    """Raised-finger counts, optionally with the identity of each finger.

    ``fingers`` holds ten flags, left hand first, each hand ordered
    thumb..little; its per-hand popcounts must match the counts.
    """

    left: int
    right: int
    fingers: tuple[bool, ...] | None = None

    def __post_init__(self):
        if not 0 <= self.left <= FINGERS_PER_HAND or not 0 <= self.right <= FINGERS_PER_HAND:
            raise ValueError("each hand shows 0..5 fingers")
        if self.fingers is not None:
            if len(self.fingers) != 2 * FINGERS_PER_HAND:
                raise ValueError("finger mask needs 10 flags")
            if sum(self.fingers[:5]) != self.left or sum(self.fingers[5:]) != self.right:
                raise ValueError("finger mask does not match the hand counts")

    @property
    def total(self) -> int:
        return self.left + self.right

    def to_json(self) -> dict:
        data = {"left": self.left, "right": self.right}
        if self.fingers is not None:
            data["fingers"] = list(self.fingers)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "HandShape":
        fingers = data.get("fingers")
        return cls(
            left=int(data["left"]),
            right=int(data["right"]),
            fingers=tuple(bool(f) for f in fingers) if fingers is not None else None,
        )


def enumerate_hand_decompositions(n: int) -> set[tuple[int, int]]:
    """All (left, right) splits of n over two hands."""
    if not 0 <= n <= 2 * FINGERS_PER_HAND:
        raise OutOfRange(f"two hands show 0..10 fingers, not {n}")
    return {(a, n - a) for a in range(FINGERS_PER_HAND + 1) if 0 <= n - a <= FINGERS_PER_HAND}


@dataclass(frozen=True)
class FingerSystem:
    name: str
    supported_values: frozenset[int]
    description: str


FRENCH_STANDARD = FingerSystem(
    name="french_standard",
    supported_values=frozenset(range(0, 11)),
    description="Count from the thumb; one hand up to five, then five plus the rest.",
)

CHAMBAA = FingerSystem(
    name="chambaa",
    supported_values=frozenset({4, 6, 7, 8}),
    description="Numbers built from pairs: 4=(2+2) on one hand, 6=3+3, 7=(2+2)+3, 8=(2+2)+(2+2).",
)

MAKONDE = FingerSystem(
    name="makonde",
    supported_values=frozenset({1, 2, 3, 4}),
    description="Fold fingers starting at the little finger; the folded ones carry the count.",
)

SYSTEMS = {s.name: s for s in (FRENCH_STANDARD, CHAMBAA, MAKONDE)}

_PAIR = Group((Atom(2), Atom(2)))

_CHAMBAA_FORMS: dict[int, tuple[Term, ...]] = {
    4: (_PAIR,),
    6: (Atom(3), Atom(3)),
    7: (_PAIR, Atom(3)),
    8: (_PAIR, _PAIR),
}


def cultural_decomposition(n: int, system: FingerSystem) -> tuple[Term, ...]:
    """How a culture shows n on the hands, as decomposition terms."""
    if n not in system.supported_values:
        raise UnsupportedValue(f"the {system.name} system has no form for {n}")
    if system is FRENCH_STANDARD or system.name == FRENCH_STANDARD.name:
        if n == 0:
            return ()
        if n <= FINGERS_PER_HAND:
            return (Atom(n),)
        return (Atom(5), Atom(n - 5))
    if system.name == CHAMBAA.name:
        return _CHAMBAA_FORMS[n]
    if system.name == MAKONDE.name:
        return (Atom(n),)
    raise UnsupportedValue(f"unknown finger system {system.name!r}")


def _prefix_mask(raised: tuple[bool, ...], from_start: bool) -> bool:
    run = raised if from_start else tuple(reversed(raised))
    seen_gap = False
    for flag in run:
        if not flag:
            seen_gap = True
        elif seen_gap:
            return False
    return True


def validate_hand_shape(shape: HandShape, system: FingerSystem) -> bool:
    """Does the finger identity follow the system's convention?

    Without a finger mask only the counts can be checked, which always
    pass. France raises fingers from the thumb; the makonde fold them from
    the little finger (the mask shows the raised ones). The chambaa
    convention constrains groupings, not finger identity, so any mask goes.
    """
    if shape.fingers is None:
        return True
    left, right = shape.fingers[:5], shape.fingers[5:]
    if system.name == FRENCH_STANDARD.name:
        return _prefix_mask(left, from_start=True) and _prefix_mask(right, from_start=True)
    if system.name == MAKONDE.name:
        folded_left = tuple(not f for f in left)
        folded_right = tuple(not f for f in right)
        return _prefix_mask(folded_left, from_start=False) and _prefix_mask(folded_right, from_start=False)
    return True
