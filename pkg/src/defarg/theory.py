"""Finite default theories: data model, selectors, parser and printer.

Theory files are sequences of statements::

    # comment
    fact e | o.
    default d1 = e : r / r.
    default d2 = true : a, !b / a.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import ParseError, TheoryError
from .formula import (
    Formula,
    TokenStream,
    is_user_name,
    parse_formula_tokens,
    theory_vocabulary,
    to_text,
    tokenize,
)

Selector = Literal["pre", "jus", "con"]


@dataclass(frozen=True)
class Default:
    """``prerequisite : justification_1, ..., justification_k / consequence``."""

    name: str
    prerequisite: Formula
    justifications: tuple[Formula, ...]
    consequence: Formula

    def __post_init__(self):
        object.__setattr__(self, "justifications", tuple(self.justifications))
        if not self.justifications:
            raise TheoryError(f"default {self.name!r} has no justifications")
        if not is_user_name(self.name):
            raise TheoryError(f"invalid default name {self.name!r}")

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return (self.prerequisite, *self.justifications, self.consequence)

    def __str__(self) -> str:
        jus = ", ".join(to_text(j) for j in self.justifications)
        return f"{to_text(self.prerequisite)} : {jus} / {to_text(self.consequence)}"


@dataclass(frozen=True)
class DefaultTheory:
    facts: tuple[Formula, ...] = ()
    defaults: tuple[Default, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "facts", _dedupe(self.facts))
        object.__setattr__(self, "defaults", tuple(self.defaults))
        seen: set[str] = set()
        for d in self.defaults:
            if d.name in seen:
                raise TheoryError(f"duplicate default name {d.name!r}")
            seen.add(d.name)
        bad = sorted(n for n in variables(self) if not is_user_name(n))
        if bad:
            raise TheoryError(f"theory mentions reserved or invalid names: {', '.join(bad)}")

    def default(self, name: str) -> Default:
        for d in self.defaults:
            if d.name == name:
                return d
        raise KeyError(name)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.defaults)


def _dedupe(formulas: Iterable[Formula]) -> tuple[Formula, ...]:
    return tuple(dict.fromkeys(formulas))


def select(defaults: Iterable[Default], which: Selector) -> tuple[Formula, ...]:
    """Union of one selector over a set of defaults, without duplicates."""
    out: list[Formula] = []
    for d in defaults:
        if which == "pre":
            out.append(d.prerequisite)
        elif which == "jus":
            out.extend(d.justifications)
        elif which == "con":
            out.append(d.consequence)
        else:
            raise ValueError(f"unknown selector {which!r}")
    return _dedupe(out)


def variables(dt: DefaultTheory) -> frozenset[str]:
    """All propositions occurring in the facts or in any default."""
    return theory_vocabulary(
        [*dt.facts, *(f for d in dt.defaults for f in d.formulas)]
    )


def parse_theory(text: str) -> DefaultTheory:
    ts = TokenStream(tokenize(text))
    facts: list[Formula] = []
    defaults: list[Default] = []
    names: set[str] = set()
    while ts.peek.kind != "EOF":
        tok = ts.next()
        if tok.kind == "NAME" and tok.text == "fact":
            facts.append(parse_formula_tokens(ts))
            ts.expect("DOT", "'.'")
        elif tok.kind == "NAME" and tok.text == "default":
            name_tok = ts.expect("NAME", "a default name")
            if name_tok.text in names:
                raise ParseError(
                    f"duplicate default name {name_tok.text!r}", name_tok.line, name_tok.column
                )
            names.add(name_tok.text)
            ts.expect("EQ", "'='")
            pre = parse_formula_tokens(ts)
            ts.expect("COLON", "':'")
            if ts.peek.kind == "SLASH":
                raise ParseError("default needs at least one justification", ts.peek.line, ts.peek.column)
            jus = [parse_formula_tokens(ts)]
            while ts.peek.kind == "COMMA":
                ts.next()
                jus.append(parse_formula_tokens(ts))
            ts.expect("SLASH", "'/'")
            con = parse_formula_tokens(ts)
            ts.expect("DOT", "'.'")
            defaults.append(Default(name_tok.text, pre, tuple(jus), con))
        else:
            raise ParseError(
                f"expected 'fact' or 'default', found {tok.text or 'end of input'!r}",
                tok.line,
                tok.column,
            )
    return DefaultTheory(tuple(facts), tuple(defaults))


def format_theory(dt: DefaultTheory) -> str:
    """Canonical text form; ``parse_theory(format_theory(dt)) == dt``."""
    lines = [f"fact {to_text(f)}." for f in dt.facts]
    lines += [f"default {d.name} = {d}." for d in dt.defaults]
    return "\n".join(lines) + ("\n" if lines else "")
