"""The oral register: number words in English, French, Maori and Breton.

Each language ships as a data table (``lexicons/<language>.tsv``) mapping
0..99 to its words and to the decomposition terms the words express: the
English and Maori seventy-three are seven tens and three, the French one
is sixty plus thirteen, and the Breton one is three, ten and three
twenties. Corrections to the linguistic data never require code changes.

Parsing is the exact inverse of saying: words are matched case-insensitively
with hyphens and spaces interchangeable, but diacritics are significant.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass
from importlib import resources

from .core import DEFAULT_ROD_COUNT, AbacusConfig, rod_state
from .errors import NoMirrorInscription, OutOfSupportedRange, UnparsableWords
from .terms import Atom, Product, Term, parse_terms_expr, render_terms, term_to_json, terms_value

SUPPORTED_MAX = 99


class Language(enum.Enum):
    ENGLISH = "english"
    FRENCH = "french"
    MAORI = "maori"
    BRETON = "breton"


@dataclass(frozen=True)
class NumeralForm:
    value: int
    language: Language
    words: str
    terms: tuple[Term, ...]
    formula: str

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "language": self.language.value,
            "words": self.words,
            "terms": [term_to_json(t) for t in self.terms],
            "formula": self.formula,
        }


def _load_lexicon(lang: Language) -> dict[int, tuple[str, tuple[Term, ...]]]:
    table: dict[int, tuple[str, tuple[Term, ...]]] = {}
    text = resources.files("suanpan.lexicons").joinpath(f"{lang.value}.tsv").read_text("utf-8")
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            n_str, words, expr = line.split("\t")
            n = int(n_str)
            terms = parse_terms_expr(expr)
        except ValueError as exc:
            raise ValueError(f"{lang.value}.tsv line {line_no}: {exc}") from exc
        if terms_value(terms) != n:
            raise ValueError(f"{lang.value}.tsv line {line_no}: terms of {n} sum to {terms_value(terms)}")
        table[n] = (words, terms)
    return table


_LEXICONS: dict[Language, dict[int, tuple[str, tuple[Term, ...]]]] = {}
_PARSE_INDEX: dict[Language, dict[str, int]] = {}


def normalize_words(words: str) -> str:
    """Case-folded, NFC, hyphens and whitespace runs collapsed to one space."""
    text = unicodedata.normalize("NFC", words).casefold()
    return " ".join(text.replace("-", " ").split())


def _lexicon(lang: Language):
    if lang not in _LEXICONS:
        table = _load_lexicon(lang)
        missing = [n for n in range(SUPPORTED_MAX + 1) if n not in table]
        if missing:
            raise ValueError(f"{lang.value}.tsv misses entries for {missing[:5]}...")
        _LEXICONS[lang] = table
        _PARSE_INDEX[lang] = {normalize_words(words): n for n, (words, _) in table.items()}
    return _LEXICONS[lang]


def say(n: int, lang: Language) -> NumeralForm:
    """Words and decomposition of ``n`` in one language; supports 0..99."""
    table = _lexicon(lang)
    if not 0 <= n <= SUPPORTED_MAX:
        raise OutOfSupportedRange(f"{lang.value} words cover 0..{SUPPORTED_MAX}, not {n}")
    words, terms = table[n]
    rendered = render_terms(terms)
    formula = str(n) if rendered == str(n) else f"{n}={rendered}"
    return NumeralForm(value=n, language=lang, words=words, terms=terms, formula=formula)


def parse_words(words: str, lang: Language) -> int:
    """The unique n in 0..99 whose words these are."""
    _lexicon(lang)
    key = normalize_words(words)
    if key not in _PARSE_INDEX[lang]:
        raise UnparsableWords(f"{words!r} is not a {lang.value} number word in 0..{SUPPORTED_MAX}")
    return _PARSE_INDEX[lang][key]


def _term_rod_contribution(term: Term) -> tuple[int, int]:
    """Map one term onto (rod index, rod value), by the term's own structure.

    A product mirrors the rods only when its base is the rod weight itself
    (a power of ten); three twenties has no single-rod home. A plain number
    lands on the rod of its trailing zeros: 60 is six tens, 13 is thirteen
    units.
    """
    if isinstance(term, Product):
        base, rod = term.b, 0
        while base % 10 == 0 and base > 1:
            base //= 10
            rod += 1
        if base != 1 or rod == 0:
            raise NoMirrorInscription(
                f"{term.a}×{term.b} is not a whole number of some rod's counters"
            )
        if not 0 < term.a <= 15:
            raise NoMirrorInscription(f"{term.a}×{term.b} exceeds one rod's 15 counters")
        return rod, term.a
    if isinstance(term, Atom):
        value = term.value
        if value == 0:
            return 0, 0
        rod = 0
        while value % 10 == 0:
            value //= 10
            rod += 1
        if value > 15:
            raise NoMirrorInscription(f"{term.value} exceeds one rod's 15 counters")
        return rod, value
    raise NoMirrorInscription("bracketed groups have no rod layout")


def oral_to_abacus_hint(form: NumeralForm, rod_count: int = DEFAULT_ROD_COUNT) -> AbacusConfig:
    """An inscription whose rods mirror the oral decomposition.

    The English/Maori form of 73 lands as the economical inscription, the
    French sixty-thirteen puts value 13 on the units rod, and the Breton
    three-twenties raises NoMirrorInscription.
    """
    per_rod = [0] * rod_count
    for term in form.terms:
        rod, value = _term_rod_contribution(term)
        if value == 0:
            continue
        if rod >= rod_count:
            raise NoMirrorInscription(f"term worth {value}×10^{rod} needs rod {rod}")
        per_rod[rod] += value
        if per_rod[rod] > 15:
            raise NoMirrorInscription(f"rod {rod} would need value {per_rod[rod]} > 15")
    rods = []
    for value in per_rod:
        upper = min(value // 5, 2)
        rods.append(rod_state(value - 5 * upper, upper))
    return AbacusConfig(rods=tuple(rods))
