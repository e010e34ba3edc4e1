"""suanpan: a classroom model of the Chinese abacus.

Bead-state inscriptions and their enumeration, click/move gestures with
trace replay, rule-based technique classification, number words in
English, French, Maori and Breton, finger-counting systems, printable
worksheets, and a local session service with an HTTP+JSON API.
"""

from .classify import AddendGroup, ReasoningTag, TechniqueReport, classify, decomposition_formula
from .core import (
    DEFAULT_ROD_COUNT,
    AbacusConfig,
    RodState,
    bead_count,
    enumerate_inscriptions,
    exchange_five_units,
    exchange_to_next_rod,
    iter_inscriptions,
    normalize,
    read_value,
    set_economical,
)
from .errors import (
    AmbiguousDrawing,
    DomainError,
    ExchangeUnavailable,
    IllegalGestureForRegister,
    MalformedDrawing,
    NoMirrorInscription,
    OutOfRange,
    OutOfSupportedRange,
    Overflow,
    UnparsableWords,
    UnreplayableTrace,
    UnsupportedValue,
)
from .fingers import (
    CHAMBAA,
    FRENCH_STANDARD,
    MAKONDE,
    FingerSystem,
    HandShape,
    cultural_decomposition,
    enumerate_hand_decompositions,
    validate_hand_shape,
)
from .gestures import (
    ClickLower,
    ClickUpper,
    CompoundMove,
    ExchangeFive,
    Gesture,
    IconPositioning,
    IconSeeNumber,
    IconSetZero,
    MoveLower,
    MoveUpper,
    Register,
    ReplayResult,
    Trace,
    apply,
    gesture_count,
    replay,
)
from .session import Attempt, Session, SessionStore, Task, TaskKind, evaluate_attempt, session_report
from .terms import Atom, Group, Product, Term, render_terms, terms_value
from .verbal import Language, NumeralForm, oral_to_abacus_hint, parse_words, say
from .worksheet import (
    DrawingStyle,
    Rendering,
    Theme,
    WorksheetItem,
    WorksheetSpec,
    parse_drawing,
    render,
    worksheet_generate,
)

__version__ = "0.1.0"
