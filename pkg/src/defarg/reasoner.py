"""Default terms, extensions and consequence queries on a translated theory."""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .argumentation import (
    TOP_PAIR,
    ArgumentationSystem,
    CJPair,
    Method,
    apply_default,
    format_term,
    is_applicable,
    is_argument_positive_part,
    minimal_contradictions,
    pair_is_structure,
    positive_term,
    term_to_json,
)
from .errors import AssumptionInQueryError, InvariantViolation, NotADefaultTermError
from .formula import Atom, Formula, to_text, vocabulary
from .logic import Lit, forget


@dataclass(frozen=True)
class DefaultTerm:
    """Anchor of an accessible structure and one generating sequence for it."""

    anchor: frozenset[str]
    sequence: tuple[str, ...] = ()

    @property
    def defaults(self) -> frozenset[str]:
        return frozenset(self.sequence)

    def __str__(self) -> str:
        return format_term(positive_term(self.anchor))


@dataclass(frozen=True)
class TermSearch:
    """Result of the generating-sequence search.

    ``routes`` maps every anchor visited during the search to each sequence
    of defaults that reached it.
    """

    terms: tuple[DefaultTerm, ...]
    routes: dict = field(default_factory=dict, compare=False)


def search_default_terms(system: ArgumentationSystem, method: Method = "mics") -> TermSearch:
    """Depth-first search for accessible structures from ``<{}, {}>``.

    Defaults are tried in theory order and anchors already expanded are not
    expanded again, since the set of applicable defaults depends on the
    anchor only. Every accessible anchor found is checked against the
    enumeration conditions (:func:`satisfies_enumeration`).
    """
    key = ("terms", method)
    hit = system._cache.get(key)
    if hit is not None:
        return hit
    reg = system.registry
    routes: dict[frozenset[str], list[tuple[str, ...]]] = {}
    terms: list[DefaultTerm] = []

    def visit(pair: CJPair, seq: tuple[str, ...]) -> None:
        seen = pair.anchor in routes
        routes.setdefault(pair.anchor, []).append(seq)
        if seen:
            return
        used = set(seq)
        pending = [
            a for a in reg
            if a.default not in used and is_applicable(system, a, pair.anchor, method)
        ]
        if not pending:
            if not satisfies_enumeration(system, seq, method):
                raise InvariantViolation(f"accessible anchor {seq} fails the enumeration conditions")
            terms.append(DefaultTerm(pair.anchor, seq))
            return
        for a in pending:
            nxt = apply_default(system, a, pair, method)
            if nxt.bottom or not pair_is_structure(system, nxt, method):
                continue
            visit(nxt, seq + (a.default,))

    if pair_is_structure(system, TOP_PAIR, method):
        visit(TOP_PAIR, ())
    result = TermSearch(tuple(sorted(terms, key=lambda t: sorted(t.anchor))), routes)
    system._cache[key] = result
    return result


def default_terms(system: ArgumentationSystem, method: Method = "mics") -> tuple[DefaultTerm, ...]:
    return search_default_terms(system, method).terms


def satisfies_enumeration(system: ArgumentationSystem, sequence: Iterable[str], method: Method = "sat") -> bool:
    """Check the four conditions characterising a default term via an ordering of its defaults.

    (i) the first prerequisite is derivable from the theory alone;
    (ii) each later prerequisite is derivable from the earlier consequences;
    (iii) no justification of a used default contradicts the anchor;
    (iv) every unused default has an underivable prerequisite or a
    contradicted justification.
    """
    reg = system.registry
    seq = [reg[name] for name in sequence]
    anchor = positive_term(a.consequence for a in seq)
    incons = functools.partial(system.inconsistent, method=method)
    prefix: set = set()
    for a in seq:
        if not incons(positive_term(prefix) | {Lit(a.prerequisite)}):
            return False
        prefix.add(a.consequence)
    for a in seq:
        if any(incons(anchor | {Lit(j)}) for j in a.justifications):
            return False
    used = {a.default for a in seq}
    for a in reg:
        if a.default in used:
            continue
        blocked = not incons(anchor | {Lit(a.prerequisite)}) or any(
            incons(anchor | {Lit(j)}) for j in a.justifications
        )
        if not blocked:
            return False
    return True


# -- classification -------------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    kind: str  # inconsistent-facts | no-extension | unique-trivial | extensions
    count: int = 0

    def __str__(self) -> str:
        return f"extensions({self.count})" if self.kind == "extensions" else self.kind

    @property
    def has_extensions(self) -> bool:
        return self.kind in ("unique-trivial", "extensions")


INCONSISTENT_FACTS = Classification("inconsistent-facts")
NO_EXTENSION = Classification("no-extension")
UNIQUE_TRIVIAL = Classification("unique-trivial", 1)


def classify(system: ArgumentationSystem) -> Classification:
    if minimal_contradictions(system) == (frozenset(),):
        return INCONSISTENT_FACTS
    terms = default_terms(system)
    if not terms:
        return NO_EXTENSION
    if len(terms) == 1 and not terms[0].anchor:
        return UNIQUE_TRIVIAL
    return Classification("extensions", len(terms))


# -- extensions and queries ---------------------------------------------------------


class ExtensionHandle:
    """One extension, represented by its default term; the marginal is built on first use."""

    def __init__(self, system: ArgumentationSystem, term: DefaultTerm):
        self.system = system
        self.term = term
        self.generating_defaults: tuple[str, ...] = system.registry.defaults_of(term.anchor)

    @functools.cached_property
    def marginal(self) -> tuple[Formula, ...]:
        units = [Atom(a) for a in sorted(self.term.anchor)]
        return forget((*self.system.theory, *units), self.system.source_vars)

    def to_json(self, with_marginal: bool = False) -> dict:
        out = {
            "defaultTerm": term_to_json(positive_term(self.term.anchor)),
            "generatingDefaults": list(self.generating_defaults),
        }
        if with_marginal:
            out["marginal"] = [to_text(f) for f in self.marginal]
        return out


def _anchor(term) -> frozenset[str]:
    return term.anchor if isinstance(term, DefaultTerm) else frozenset(term)


def extension_of(system: ArgumentationSystem, term) -> ExtensionHandle:
    anchor = _anchor(term)
    for t in default_terms(system):
        if t.anchor == anchor:
            return ExtensionHandle(system, t)
    raise NotADefaultTermError(f"{format_term(positive_term(anchor))} is not a default term")


def extensions(system: ArgumentationSystem) -> list[ExtensionHandle]:
    return [ExtensionHandle(system, t) for t in default_terms(system)]


def _check_query(f: Formula) -> None:
    reserved = sorted(n for n in vocabulary(f) if n.startswith("@"))
    if reserved:
        raise AssumptionInQueryError(f"query mentions assumptions: {', '.join(reserved)}")


def in_extension(system: ArgumentationSystem, term, f: Formula) -> bool:
    """Membership of ``f`` in the extension of ``term``, without building the marginal."""
    _check_query(f)
    return system.entails(positive_term(_anchor(term)), f)


def supported_terms(system: ArgumentationSystem, f: Formula) -> list[DefaultTerm]:
    """Default terms that are the positive part of some supporting argument for ``f``."""
    _check_query(f)
    return [t for t in default_terms(system) if is_argument_positive_part(system, f, t.anchor)]


def credulous(system: ArgumentationSystem, f: Formula) -> bool:
    """``f`` holds in at least one extension.

    Computed from supporting arguments and default terms, and cross-checked
    against direct entailment in each extension.
    """
    by_arguments = bool(supported_terms(system, f))
    direct = any(in_extension(system, t, f) for t in default_terms(system))
    if by_arguments != direct:
        raise InvariantViolation(f"credulous({to_text(f)}): arguments say {by_arguments}, extensions say {direct}")
    return by_arguments


def skeptical(system: ArgumentationSystem, f: Formula) -> bool:
    """``f`` holds in every extension; vacuously true when there is none."""
    terms = default_terms(system)
    by_arguments = len(supported_terms(system, f)) == len(terms)
    direct = all(in_extension(system, t, f) for t in terms)
    if by_arguments != direct:
        raise InvariantViolation(f"skeptical({to_text(f)}): arguments say {by_arguments}, extensions say {direct}")
    return by_arguments


def extensions_report(system: ArgumentationSystem, with_marginal: bool = False) -> dict:
    return {
        "classification": str(classify(system)),
        "extensions": [h.to_json(with_marginal) for h in extensions(system)],
    }


def permutation_violations(search: TermSearch, system: ArgumentationSystem) -> list[frozenset[str]]:
    """Anchors reached by routes whose default multisets differ."""
    bad = []
    for anchor, seqs in search.routes.items():
        counts = {tuple(sorted(Counter(s).items())) for s in seqs}
        expected = tuple(sorted(Counter(system.registry.defaults_of(anchor)).items()))
        if len(counts) > 1 or counts != {expected}:
            bad.append(anchor)
    return bad
