"""Paper-and-pencil register: drawings of abacus states and worksheets.

Students draw an inscription in one of three styles: every bead with the
activated ones marked, only the activated beads, or one stroke standing
for a whole run of activated beads. Each rendering carries a structural
description alongside the SVG so that drawings round-trip exactly back to
configurations for grading; the SVG is cosmetic, the structure is the
contract.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .core import (
    LOWER_BEADS,
    UPPER_BEADS,
    AbacusConfig,
    read_value,
    rod_state,
    set_economical,
)
from .errors import AmbiguousDrawing, MalformedDrawing, Overflow


class DrawingStyle(enum.Enum):
    FULL_BEADS = "full_beads"
    ACTIVATED_ONLY = "activated_only"
    SYMBOLIC = "symbolic"


@dataclass(frozen=True)
class Theme:
    """Geometry of the drawing; tests never depend on these numbers."""

    rod_spacing: int = 56
    bead_rx: int = 18
    bead_ry: int = 11
    bead_gap: int = 26
    beam_height: int = 8
    upper_rows: int = UPPER_BEADS
    lower_rows: int = LOWER_BEADS
    margin: int = 24
    frame_color: str = "#8a5a2b"
    bead_color: str = "#d9b38c"
    active_color: str = "#7a2e1d"
    stroke_color: str = "#333333"


DEFAULT_THEME = Theme()


def _dimensions(rod_count: int, theme: Theme) -> tuple[int, int, int]:
    width = 2 * theme.margin + rod_count * theme.rod_spacing
    beam_y = theme.margin + (theme.upper_rows + 1) * theme.bead_gap
    height = beam_y + (theme.lower_rows + 1) * theme.bead_gap + theme.margin
    return width, height, beam_y


def _rod_x(rod: int, rod_count: int, theme: Theme) -> int:
    # units rod drawn rightmost
    return theme.margin + (rod_count - 1 - rod) * theme.rod_spacing + theme.rod_spacing // 2


def _bead_y(part: str, index: int, beam_y: int, theme: Theme) -> int:
    # index 1 is nearest the beam
    if part == "upper":
        return beam_y - theme.beam_height - index * theme.bead_gap
    return beam_y + theme.beam_height + index * theme.bead_gap


def _bead(x: int, y: int, active: bool, theme: Theme) -> str:
    fill = theme.active_color if active else theme.bead_color
    marker = "bead active" if active else "bead"
    return f'<ellipse class="{marker}" cx="{x}" cy="{y}" rx="{theme.bead_rx}" ry="{theme.bead_ry}" fill="{fill}"/>'


def _stroke(x: int, y1: int, y2: int, theme: Theme) -> str:
    return (
        f'<line class="stroke" x1="{x}" y1="{y1}" x2="{x}" y2="{y2}" '
        f'stroke="{theme.active_color}" stroke-width="10" stroke-linecap="round"/>'
    )


def _frame(rod_count: int, theme: Theme, with_rods: bool = True) -> list[str]:
    width, height, beam_y = _dimensions(rod_count, theme)
    parts = [
        f'<rect class="frame" x="2" y="2" width="{width - 4}" height="{height - 4}" '
        f'fill="none" stroke="{theme.frame_color}" stroke-width="4" rx="6"/>',
        f'<rect class="beam" x="2" y="{beam_y - theme.beam_height // 2}" width="{width - 4}" '
        f'height="{theme.beam_height}" fill="{theme.frame_color}"/>',
    ]
    if with_rods:
        for rod in range(rod_count):
            x = _rod_x(rod, rod_count, theme)
            parts.append(
                f'<line class="rod" x1="{x}" y1="6" x2="{x}" y2="{height - 6}" '
                f'stroke="{theme.frame_color}" stroke-width="3"/>'
            )
    return parts


def _draw(config: AbacusConfig, style: DrawingStyle, theme: Theme) -> list[str]:
    rod_count = config.rod_count
    _, _, beam_y = _dimensions(rod_count, theme)
    parts = _frame(rod_count, theme)
    for rod, state in enumerate(config.rods):
        x = _rod_x(rod, rod_count, theme)
        if style is DrawingStyle.FULL_BEADS:
            # active beads sit against the beam, inactive ones at the far end
            for i in range(1, UPPER_BEADS + 1):
                active = i <= state.upper
                parts.append(_bead(x, _bead_y("upper", i if active else i + 1, beam_y, theme), active, theme))
            for i in range(1, LOWER_BEADS + 1):
                active = i <= state.lower
                parts.append(_bead(x, _bead_y("lower", i if active else i + 1, beam_y, theme), active, theme))
        elif style is DrawingStyle.ACTIVATED_ONLY:
            for i in range(1, state.upper + 1):
                parts.append(_bead(x, _bead_y("upper", i, beam_y, theme), True, theme))
            for i in range(1, state.lower + 1):
                parts.append(_bead(x, _bead_y("lower", i, beam_y, theme), True, theme))
        else:  # SYMBOLIC
            if state.upper:
                parts.append(
                    _stroke(x, _bead_y("upper", state.upper, beam_y, theme), _bead_y("upper", 1, beam_y, theme), theme)
                )
            if state.lower:
                parts.append(
                    _stroke(x, _bead_y("lower", 1, beam_y, theme), _bead_y("lower", state.lower, beam_y, theme), theme)
                )
    return parts


def _structure(config: AbacusConfig, style: DrawingStyle) -> dict:
    if style is DrawingStyle.FULL_BEADS:
        rods = [
            {
                "upper": [i <= state.upper for i in range(1, UPPER_BEADS + 1)],
                "lower": [i <= state.lower for i in range(1, LOWER_BEADS + 1)],
            }
            for state in config.rods
        ]
        return {"style": style.value, "rod_count": config.rod_count, "rods": rods}
    if style is DrawingStyle.ACTIVATED_ONLY:
        glyphs = []
        for rod, state in enumerate(config.rods):
            glyphs += [{"rod": rod, "part": "upper"}] * state.upper
            glyphs += [{"rod": rod, "part": "lower"}] * state.lower
        return {"style": style.value, "rod_count": config.rod_count, "glyphs": glyphs}
    strokes = []
    for rod, state in enumerate(config.rods):
        if state.upper:
            strokes.append({"rod": rod, "part": "upper", "length": state.upper})
        if state.lower:
            strokes.append({"rod": rod, "part": "lower", "length": state.lower})
    return {"style": style.value, "rod_count": config.rod_count, "strokes": strokes}


@dataclass(frozen=True)
class Rendering:
    svg: str
    structure: dict


def render(config: AbacusConfig, style: DrawingStyle, theme: Theme = DEFAULT_THEME) -> Rendering:
    """Draw one inscription; the structure round-trips through parse_drawing."""
    width, height, _ = _dimensions(config.rod_count, theme)
    body = "\n".join(_draw(config, style, theme))
    svg = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n{body}\n</svg>'
    )
    return Rendering(svg=svg, structure=_structure(config, style))


def _prefix_count(flags: list, what: str) -> int:
    count = 0
    seen_gap = False
    for flag in flags:
        if flag:
            if seen_gap:
                raise MalformedDrawing(f"{what}: activated beads must sit against the beam")
            count += 1
        else:
            seen_gap = True
    return count


def parse_drawing(structure: dict) -> AbacusConfig:
    """Inverse of render's structural description."""
    if not isinstance(structure, dict) or "style" not in structure:
        raise MalformedDrawing("drawing description needs a style")
    try:
        style = DrawingStyle(structure["style"])
    except ValueError:
        raise MalformedDrawing(f"unknown drawing style {structure['style']!r}") from None
    rod_count = structure.get("rod_count")
    if not isinstance(rod_count, int) or rod_count < 1:
        raise MalformedDrawing("drawing description needs a positive rod_count")

    counts = [{"lower": 0, "upper": 0} for _ in range(rod_count)]

    if style is DrawingStyle.FULL_BEADS:
        rods = structure.get("rods")
        if not isinstance(rods, list) or len(rods) != rod_count:
            raise MalformedDrawing("full-beads drawing needs one rod entry per rod")
        for rod, entry in enumerate(rods):
            upper, lower = entry.get("upper"), entry.get("lower")
            if not isinstance(upper, list) or len(upper) != UPPER_BEADS:
                raise MalformedDrawing(f"rod {rod}: upper part needs {UPPER_BEADS} bead flags")
            if not isinstance(lower, list) or len(lower) != LOWER_BEADS:
                raise MalformedDrawing(f"rod {rod}: lower part needs {LOWER_BEADS} bead flags")
            counts[rod]["upper"] = _prefix_count(upper, f"rod {rod} upper")
            counts[rod]["lower"] = _prefix_count(lower, f"rod {rod} lower")
    elif style is DrawingStyle.ACTIVATED_ONLY:
        for glyph in structure.get("glyphs", []):
            rod = glyph.get("rod")
            if not isinstance(rod, int) or not 0 <= rod < rod_count:
                raise MalformedDrawing(f"glyph on unknown rod {rod!r}")
            part = glyph.get("part")
            if part not in ("lower", "upper"):
                raise AmbiguousDrawing(f"glyph on rod {rod} has no rod part")
            counts[rod][part] += 1
    else:
        seen = set()
        for stroke in structure.get("strokes", []):
            rod, part = stroke.get("rod"), stroke.get("part")
            if not isinstance(rod, int) or not 0 <= rod < rod_count:
                raise MalformedDrawing(f"stroke on unknown rod {rod!r}")
            if part not in ("lower", "upper"):
                raise MalformedDrawing(f"stroke on rod {rod} has no rod part")
            if (rod, part) in seen:
                raise MalformedDrawing(f"rod {rod} {part}: a run is one stroke")
            seen.add((rod, part))
            length = stroke.get("length")
            if not isinstance(length, int) or length < 1:
                raise MalformedDrawing(f"rod {rod} {part}: stroke needs a positive length")
            counts[rod][part] = length

    rods = []
    for rod, entry in enumerate(counts):
        if entry["lower"] > LOWER_BEADS:
            raise MalformedDrawing(f"rod {rod}: {entry['lower']} one-unit counters exceed {LOWER_BEADS}")
        if entry["upper"] > UPPER_BEADS:
            raise MalformedDrawing(f"rod {rod}: {entry['upper']} five-unit counters exceed {UPPER_BEADS}")
        rods.append(rod_state(entry["lower"], entry["upper"]))
    return AbacusConfig(rods=tuple(rods))


@dataclass(frozen=True)
class WorksheetItem:
    kind: str  # "set" | "read"
    style: DrawingStyle
    target: int | None = None  # SET: the number to inscribe
    config: AbacusConfig | None = None  # READ: the printed inscription

    @classmethod
    def from_json(cls, data: dict) -> "WorksheetItem":
        kind = data.get("kind")
        if kind not in ("set", "read"):
            raise ValueError(f"worksheet item kind must be 'set' or 'read', not {kind!r}")
        style = DrawingStyle(data.get("style", DrawingStyle.FULL_BEADS.value))
        if kind == "set":
            return cls(kind=kind, style=style, target=int(data["target"]))
        if "config" in data:
            return cls(kind=kind, style=style, config=AbacusConfig.from_json(data["config"]))
        return cls(kind=kind, style=style, target=int(data["target"]))


@dataclass(frozen=True)
class WorksheetSpec:
    items: tuple[WorksheetItem, ...]
    rod_count: int = 2
    seed: int = 0
    items_per_page: int = 4

    @classmethod
    def from_json(cls, data: dict) -> "WorksheetSpec":
        return cls(
            items=tuple(WorksheetItem.from_json(i) for i in data.get("items", [])),
            rod_count=int(data.get("rod_count", 2)),
            seed=int(data.get("seed", 0)),
            items_per_page=int(data.get("items_per_page", 4)),
        )


@dataclass(frozen=True)
class WorksheetDocument:
    pages: tuple[str, ...]  # one SVG per page
    key: dict  # item index -> expected answer
    structures: tuple[dict, ...] = field(default=())

    def to_json(self) -> dict:
        return {"pages": list(self.pages), "key": self.key}


def worksheet_generate(spec: WorksheetSpec, theme: Theme = DEFAULT_THEME) -> WorksheetDocument:
    """Printable pages plus the answer key; deterministic under the seed."""
    prepared = []
    for item in spec.items:
        if item.kind == "set":
            if item.target is None:
                raise ValueError("a set item needs a target")
            if item.target >= 10**spec.rod_count:
                raise Overflow(f"{item.target} does not fit on {spec.rod_count} rod(s)")
            config = AbacusConfig.zeros(spec.rod_count)
            expected = {
                "value": item.target,
                "config": set_economical(item.target, spec.rod_count).to_json(),
            }
            caption = f"Set {item.target}"
        else:
            config = item.config if item.config is not None else set_economical(item.target or 0, spec.rod_count)
            if config.rod_count != spec.rod_count:
                raise ValueError("printed config does not match the worksheet rod_count")
            expected = read_value(config)
            caption = "Read the number"
        prepared.append((item, config, expected, caption))

    order = list(range(len(prepared)))
    random.Random(spec.seed).shuffle(order)

    key: dict[int, object] = {}
    structures = []
    pages = []
    width, item_height, _ = _dimensions(spec.rod_count, theme)
    caption_height = 30
    slot = item_height + caption_height + theme.margin

    for page_start in range(0, len(order), spec.items_per_page):
        chunk = order[page_start : page_start + spec.items_per_page]
        parts = []
        for row, original_index in enumerate(chunk):
            item, config, expected, caption = prepared[original_index]
            index = page_start + row
            key[index] = expected
            structure = _structure(config, item.style)
            structures.append(structure)
            y = row * slot
            parts.append(f'<g class="item" transform="translate(0,{y})">')
            parts.append(
                f'<text class="caption" x="4" y="18" font-family="sans-serif" font-size="16">'
                f"{index + 1}. {caption}</text>"
            )
            parts.append(f'<g transform="translate(0,{caption_height})">')
            parts += _draw(config, item.style, theme)
            parts.append("</g></g>")
        page_height = len(chunk) * slot
        body = "\n".join(parts)
        pages.append(
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{page_height}" '
            f'viewBox="0 0 {width} {page_height}">\n{body}\n</svg>'
        )
    return WorksheetDocument(pages=tuple(pages), key=key, structures=tuple(structures))
