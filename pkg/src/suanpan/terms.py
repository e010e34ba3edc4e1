"""Decomposition terms: the additive/multiplicative skeleton of a number.

Spoken numerals and finger configurations both decompose a value into a
sum of terms, where a term is a plain number, a product (Breton sixty is
three twenties), or a bracketed sub-sum (one chambaa hand shows 2+2).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Atom:
    value: int


@dataclass(frozen=True)
class Product:
    a: int
    b: int

    @property
    def value(self) -> int:
        return self.a * self.b


@dataclass(frozen=True)
class Group:
    terms: tuple["Term", ...]

    @property
    def value(self) -> int:
        return sum(t.value for t in self.terms)


Term = Atom | Product | Group


def term_value(term: Term) -> int:
    return term.value


def terms_value(terms: tuple[Term, ...] | list[Term]) -> int:
    return sum(t.value for t in terms)


def render_term(term: Term) -> str:
    if isinstance(term, Atom):
        return str(term.value)
    if isinstance(term, Product):
        return f"{term.a}×{term.b}"
    return "(" + "+".join(render_term(t) for t in term.terms) + ")"


def render_terms(terms) -> str:
    """Sum of terms; a lone bracketed group drops its brackets."""
    if len(terms) == 1 and isinstance(terms[0], Group):
        return "+".join(render_term(t) for t in terms[0].terms)
    return "+".join(render_term(t) for t in terms)


def term_to_json(term: Term):
    if isinstance(term, Atom):
        return {"type": "atom", "value": term.value}
    if isinstance(term, Product):
        return {"type": "product", "a": term.a, "b": term.b}
    return {"type": "group", "terms": [term_to_json(t) for t in term.terms]}


def term_from_json(data: dict) -> Term:
    kind = data.get("type")
    if kind == "atom":
        return Atom(int(data["value"]))
    if kind == "product":
        return Product(int(data["a"]), int(data["b"]))
    if kind == "group":
        return Group(tuple(term_from_json(t) for t in data["terms"]))
    raise ValueError(f"unknown term type {kind!r}")


def parse_terms_expr(expr: str) -> tuple[Term, ...]:
    """Parse a compact terms expression like ``3+10+3*20``.

    Used by the lexicon files; products use ``*`` and there is no nesting.
    """
    terms: list[Term] = []
    for chunk in expr.split("+"):
        chunk = chunk.strip()
        if "*" in chunk:
            a, b = chunk.split("*")
            terms.append(Product(int(a), int(b)))
        else:
            terms.append(Atom(int(chunk)))
    return tuple(terms)
