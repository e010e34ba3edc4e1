"""Rule-based classification of gesture traces into techniques.

A replayed trace shows *how* a student set a number, and the way the beads
were moved reveals the reasoning: activating counters one by one is
counting; grabbing the k-th bead in a single gesture is ordinal; leading
with a five-unit counter and completing with a block is additive
calculation; trading five counted units for one five-unit counter is an
exchange; consulting the displayed number mid-attempt (or retracting
beads) is trial and error.

The classifier works per rod on the stream of bead gestures, in order:

1. corrections (any deactivation) and any see-number use before the final
   state mark the attempt as trial/error;
2. five one-by-one unit activations directly followed by an exchange fuse
   into a parenthesized addend group, tagged counting + exchange;
3. an upper activation followed by a lower block is calculating; followed
   by one-by-one steps it is quantity/value (plus counting when there are
   at least two steps);
4. a compound move covering both parts of the rod is calculating done in
   one gesture;
5. a remaining run of k >= 2 one-by-one activations is counting; a
   remaining block of k >= 2 beads in one gesture is ordinality.

A single-bead activation on its own is ambiguous between counting and
ordinality (the gestures are indistinguishable), so it gets no tag and the
report carries an "ambiguous-single-bead" note instead.

Addends are recorded per rod at rod scale (ones and fives); serialisation
and formulas scale them by the rod weight 10**k so that the rendered sum
always equals the value read off the final configuration. Deactivations
contribute negative addends to keep that invariant. Technique identifiers
are defined for single-rod attempts; a trace that works several rods gets
per-rod sub-reports and an empty top-level identifier.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .core import DEFAULT_ROD_COUNT, AbacusConfig, read_value
from .gestures import (
    CompoundMove,
    ExchangeFive,
    IconPositioning,
    IconSeeNumber,
    IconSetZero,
    Register,
    Trace,
    replay,
)


class ReasoningTag(enum.Enum):
    COUNTING = "counting"
    ORDINALITY = "ordinality"
    CALCULATING = "calculating"
    QUANTITY_VALUE = "quantity_value"
    EXCHANGE = "exchange"
    TRIAL_ERROR = "trial_error"


@dataclass(frozen=True)
class AddendGroup:
    """Addends one or more gestures contributed on one rod.

    ``addends`` are at rod scale (1 per one-unit counter, 5 per five-unit
    counter, negativeents for retractions); ``parenthesized`` marks groups the
    formula must keep visibly bracketed, i.e. an exchanged counted five.
    """

    rod: int
    addends: tuple[int, ...]
    parenthesized: bool = False

    def scaled(self, rank_weights: bool = True) -> tuple[int, ...]:
        factor = 10**self.rod if rank_weights else 1
        return tuple(a * factor for a in self.addends)

    def to_json(self):
        scaled = list(self.scaled())
        if len(scaled) == 1 and not self.parenthesized:
            return scaled[0]
        return scaled


@dataclass(frozen=True)
class RodReport:
    """Classification of the gestures that touched one rod."""

    rod: int
    technique_id: str
    tags: frozenset[ReasoningTag]
    decomposition: tuple[AddendGroup, ...]
    formula: str

    def to_json(self) -> dict:
        return {
            "rod": self.rod,
            "technique_id": self.technique_id,
            "tags": sorted(t.value for t in self.tags),
            "decomposition": [g.to_json() for g in self.decomposition],
            "formula": self.formula,
        }


@dataclass(frozen=True)
class TechniqueReport:
    technique_id: str
    tags: frozenset[ReasoningTag]
    decomposition: tuple[AddendGroup, ...]
    formula: str
    correct: bool
    notes: tuple[str, ...] = ()
    sub_reports: tuple[RodReport, ...] = ()

    def to_json(self) -> dict:
        data = {
            "technique_id": self.technique_id,
            "tags": sorted(t.value for t in self.tags),
            "decomposition": [g.to_json() for g in self.decomposition],
            "formula": self.formula,
            "correct": self.correct,
            "notes": list(self.notes),
        }
        if self.sub_reports:
            data["sub_reports"] = [r.to_json() for r in self.sub_reports]
        return data


# Internal event stream, one entry per bead gesture.
@dataclass
class _Event:
    index: int  # gesture index in the trace
    kind: str  # upper | single | block | exchange | compound | correction
    rod: int
    lower_delta: int = 0
    upper_delta: int = 0


def _events_from_replay(trace: Trace, initial: AbacusConfig):
    """Replay and turn each gesture into a typed event.

    Returns (events per rod, flat events, see-number indices, last index
    that changed the configuration, indices of set-zero resets).
    """
    result = replay(trace, initial)
    see_number_uses: list[int] = []
    resets: list[int] = []
    events: list[_Event] = []
    last_change = -1
    before = initial
    for i, gesture in enumerate(trace.gestures):
        after = result.steps[i]
        if after != before:
            last_change = i
        if isinstance(gesture, IconSeeNumber):
            if gesture.on:
                see_number_uses.append(i)
        elif isinstance(gesture, IconSetZero):
            if after != before:
                resets.append(i)
        elif isinstance(gesture, IconPositioning):
            pass  # redistributes beads, value unchanged
        elif isinstance(gesture, ExchangeFive):
            events.append(_Event(i, "exchange", gesture.rod, lower_delta=-5, upper_delta=+1))
        else:
            rod = gesture.rod
            dl = after.rods[rod].lower - before.rods[rod].lower
            du = after.rods[rod].upper - before.rods[rod].upper
            if isinstance(gesture, CompoundMove):
                kind = "compound" if dl > 0 and du > 0 else "correction"
            elif dl < 0 or du < 0:
                kind = "correction"
            elif du > 0:
                kind = "upper"
            elif dl == 1:
                kind = "single"
            else:
                kind = "block"
            events.append(_Event(i, kind, rod, lower_delta=dl, upper_delta=du))
        before = after
    return result, events, see_number_uses, last_change, resets


@dataclass
class _RodScan:
    tags: set[ReasoningTag] = field(default_factory=set)
    groups: list[tuple[int, AddendGroup]] = field(default_factory=list)  # (gesture index, group)
    shape: list[tuple] = field(default_factory=list)
    notes: set[str] = field(default_factory=set)


def _scan_rod(rod: int, events: list[_Event]) -> _RodScan:
    """Apply the tagging rules to one rod's bead-event stream."""
    scan = _RodScan()
    i = 0
    n = len(events)

    def run_length(start: int) -> int:
        j = start
        while j < n and events[j].kind == "single":
            j += 1
        return j - start

    def emit_singles(start: int, count: int):
        for j in range(start, start + count):
            scan.groups.append((events[j].index, AddendGroup(rod, (1,))))

    while i < n:
        ev = events[i]
        if ev.kind == "single":
            k = run_length(i)
            if k == 5 and i + 5 < n and events[i + 5].kind == "exchange":
                scan.groups.append((events[i].index, AddendGroup(rod, (1,) * 5, parenthesized=True)))
                scan.tags |= {ReasoningTag.COUNTING, ReasoningTag.EXCHANGE}
                scan.shape += [("run", 5), ("exchange",)]
                i += 6
                continue
            emit_singles(i, k)
            if k >= 2:
                scan.tags.add(ReasoningTag.COUNTING)
            else:
                scan.notes.add("ambiguous-single-bead")
            scan.shape.append(("run", k))
            i += k
            continue
        if ev.kind == "upper":
            scan.groups.append((ev.index, AddendGroup(rod, (5,) * ev.upper_delta)))
            scan.shape.append(("upper", ev.upper_delta))
            i += 1
            if i < n and events[i].kind == "block":
                scan.groups.append((events[i].index, AddendGroup(rod, (events[i].lower_delta,))))
                scan.tags.add(ReasoningTag.CALCULATING)
                scan.shape.append(("block", events[i].lower_delta))
                i += 1
            elif i < n and events[i].kind == "single":
                k = run_length(i)
                if k == 5 and i + 5 < n and events[i + 5].kind == "exchange":
                    # the counted five belongs to the exchange, not to the five-unit lead
                    continue
                emit_singles(i, k)
                scan.tags.add(ReasoningTag.QUANTITY_VALUE)
                if k >= 2:
                    scan.tags.add(ReasoningTag.COUNTING)
                else:
                    scan.notes.add("ambiguous-single-bead")
                scan.shape.append(("run", k))
                i += k
            continue
        if ev.kind == "block":
            scan.groups.append((ev.index, AddendGroup(rod, (ev.lower_delta,))))
            scan.tags.add(ReasoningTag.ORDINALITY)
            scan.shape.append(("block", ev.lower_delta))
            i += 1
            continue
        if ev.kind == "compound":
            scan.groups.append((ev.index, AddendGroup(rod, (5,) * ev.upper_delta + (ev.lower_delta,))))
            scan.tags.add(ReasoningTag.CALCULATING)
            scan.shape.append(("compound",))
            i += 1
            continue
        if ev.kind == "exchange":
            # exchange without a counted five before it: value neutral
            scan.tags.add(ReasoningTag.EXCHANGE)
            scan.shape.append(("exchange",))
            i += 1
            continue
        # correction: retraction, negative addends keep the sum honest
        addends = []
        if ev.upper_delta:
            addends.append(5 * ev.upper_delta)
        if ev.lower_delta:
            addends.append(ev.lower_delta)
        scan.groups.append((ev.index, AddendGroup(rod, tuple(addends))))
        scan.tags.add(ReasoningTag.TRIAL_ERROR)
        scan.shape.append(("correction",))
        i += 1
    return scan


def _match_table(shape: list[tuple], target: int, tags: set[ReasoningTag], register: Register) -> str:
    """Strict lookup of the technique identifier for one rod's shape.

    Identifiers are task-relative: targets below five have a counting, an
    ordinal and a trial/error technique; targets needing the five-unit
    counter have the six richer ones. Trial/error wins whenever present
    (it is only observable on the virtual abacus).
    """
    if ReasoningTag.TRIAL_ERROR in tags:
        if register is not Register.VIRTUAL_ABACUS:
            return ""
        return "RVA_T3" if target < 5 else "RVA_T6"
    if target < 5:
        if len(shape) == 1 and shape[0][0] == "run" and shape[0][1] >= 2:
            return "RA_T1"
        if len(shape) == 1 and shape[0][0] == "block":
            return "RA_T2"
        return ""
    if len(shape) == 2 and shape[0] == ("upper", 1):
        if shape[1][0] == "block":
            return "RA_T1"
        if shape[1][0] == "run" and shape[1][1] >= 2:
            return "RA_T2"
    if len(shape) == 3 and shape[0] == ("run", 5) and shape[1] == ("exchange",):
        if shape[2][0] == "run" and shape[2][1] >= 2:
            return "RA_T3"
        if shape[2][0] == "block":
            return "RA_T4"
    if len(shape) == 1 and shape[0] == ("compound",):
        return "RMA_T5"
    return ""


def _join_terms(terms: list[str]) -> str:
    out = terms[0]
    for term in terms[1:]:
        out += term if term.startswith("-") else "+" + term
    return out


def _render_group(group: AddendGroup, rank_weights: bool) -> str:
    inner = _join_terms([str(a) for a in group.scaled(rank_weights)])
    return f"({inner})" if group.parenthesized else inner


def decomposition_formula(report: TechniqueReport, rank_weights: bool = True) -> str:
    """Render the addend groups as a decomposition formula.

    Rod segments (maximal runs of groups on one rod) are summed for the
    middle form and expanded for the full form; a multi-addend segment is
    bracketed when several rods are involved. Parts that repeat the
    previous one are dropped, so a single block gesture renders as just
    the number.
    """
    return _formula(report.decomposition, rank_weights, one_gesture="one-gesture" in report.notes)


def _formula(groups: tuple[AddendGroup, ...], rank_weights: bool, one_gesture: bool = False) -> str:
    if not groups:
        return "0"
    segments: list[list[AddendGroup]] = []
    for group in groups:
        if segments and segments[-1][0].rod == group.rod:
            segments[-1].append(group)
        else:
            segments.append([group])
    total = sum(sum(g.scaled(rank_weights)) for g in groups)
    seg_sums = [sum(sum(g.scaled(rank_weights)) for g in seg) for seg in segments]
    seg_exprs = []
    for seg in segments:
        expr = _join_terms([_render_group(g, rank_weights) for g in seg])
        addend_count = sum(len(g.addends) for g in seg)
        if len(segments) > 1 and addend_count > 1:
            expr = f"({expr})"
        seg_exprs.append(expr)
    parts = [str(total)]
    for candidate in (_join_terms([str(s) for s in seg_sums]), _join_terms(seg_exprs)):
        if candidate != parts[-1]:
            parts.append(candidate)
    rendered = "=".join(parts)
    if one_gesture:
        rendered += " (one gesture)"
    return rendered


def classify(trace: Trace, target: int, rod_count: int | None = None) -> TechniqueReport:
    """Replay a trace from the empty abacus and label the technique used.

    An explicit ``rod_count`` is the abacus the trace claims to run on, so
    gestures beyond it fail the replay; with ``None`` the size is inferred
    from the rods touched (at least the default six).

    Raises UnreplayableTrace when a gesture is illegal at its step.
    """
    if rod_count is None:
        touched = [g.rod for g in trace.gestures if hasattr(g, "rod")]
        rod_count = max(DEFAULT_ROD_COUNT, max(touched, default=0) + 1)
    initial = AbacusConfig.zeros(rod_count)

    result, events, see_number_uses, last_change, resets = _events_from_replay(trace, initial)

    notes: set[str] = set()
    if resets:
        # a restart wipes what was set so far; classify what remains
        cut = max(resets)
        events = [e for e in events if e.index > cut]
        notes.add("restarted")

    rods_touched = sorted({e.rod for e in events})
    scans = {rod: _scan_rod(rod, [e for e in events if e.rod == rod]) for rod in rods_touched}

    tags: set[ReasoningTag] = set()
    indexed_groups: list[tuple[int, AddendGroup]] = []
    for scan in scans.values():
        tags |= scan.tags
        notes |= scan.notes
        indexed_groups += scan.groups
    indexed_groups.sort(key=lambda pair: pair[0])
    groups = tuple(group for _, group in indexed_groups)

    if resets:
        tags.add(ReasoningTag.TRIAL_ERROR)
    if any(i < last_change for i in see_number_uses):
        tags.add(ReasoningTag.TRIAL_ERROR)

    if len(events) == 1 and events[0].kind == "compound":
        notes.add("one-gesture")
    if not trace.gestures:
        notes.add("empty-trace")

    sub_reports: tuple[RodReport, ...] = ()
    if len(rods_touched) == 1:
        rod = rods_touched[0]
        technique_id = _match_table(scans[rod].shape, target, tags, trace.register)
    else:
        technique_id = ""
        if len(rods_touched) > 1:
            notes.add("multi-rod")
            subs = []
            for rod in rods_touched:
                scan = scans[rod]
                rod_groups = tuple(g for _, g in sorted(scan.groups, key=lambda p: p[0]))
                rod_value = sum(sum(g.scaled(False)) for g in rod_groups)
                sub_id = _match_table(scan.shape, rod_value, scan.tags | (tags & {ReasoningTag.TRIAL_ERROR}), trace.register)
                subs.append(
                    RodReport(
                        rod=rod,
                        technique_id=sub_id,
                        tags=frozenset(scan.tags),
                        decomposition=rod_groups,
                        formula=_formula(rod_groups, rank_weights=True),
                    )
                )
            sub_reports = tuple(subs)

    return TechniqueReport(
        technique_id=technique_id,
        tags=frozenset(tags),
        decomposition=groups,
        formula=_formula(groups, rank_weights=True, one_gesture="one-gesture" in notes),
        correct=read_value(result.final) == target,
        notes=tuple(sorted(notes)),
        sub_reports=sub_reports,
    )
