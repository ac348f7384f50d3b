"""Propositional argumentation systems: terms, contradictions, arguments, structures.

A term is a set of assumption literals without complementary pairs; the
empty term stands for ``true``. Terms are ``frozenset``s of :class:`Lit`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Literal

from .formula import Formula, Not, theory_vocabulary
from .logic import Lit, Solver, clause_key, clauses_of, is_satisfiable

if TYPE_CHECKING:
    from .transform import AssumptionRegistry, DefaultAssumption

Term = frozenset  # frozenset[Lit]
Method = Literal["sat", "mics"]


@dataclass(frozen=True, eq=False)
class ArgumentationSystem:
    """An argumentation theory together with its set of assumption names.

    ``registry`` is present when the system was produced from a default
    theory. Answers are cached internally; the cache never changes results.
    """

    theory: tuple[Formula, ...]
    assumptions: frozenset[str]
    registry: AssumptionRegistry | None = None
    source_vars: frozenset[str] | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "theory", tuple(dict.fromkeys(self.theory)))
        object.__setattr__(self, "assumptions", frozenset(self.assumptions))
        if self.source_vars is None:
            object.__setattr__(
                self, "source_vars", theory_vocabulary(self.theory) - self.assumptions
            )

    @property
    def solver(self) -> Solver:
        s = self._cache.get("solver")
        if s is None:
            s = self._cache["solver"] = Solver(clauses_of(self.theory), self.assumptions)
        return s

    def candidate_literals(self) -> list[Lit]:
        """Assumption literals that can occur in a minimal contradiction.

        Asserting a literal only removes models if its complement occurs in
        the clause form of the theory.
        """
        lits = self._cache.get("candidates")
        if lits is None:
            occurring = {l for c in clauses_of(self.theory) for l in c}
            lits = sorted(
                (-l for l in occurring if l.name in self.assumptions), key=lambda l: l.key
            )
            self._cache["candidates"] = lits
        return lits

    def inconsistent(self, lits: Iterable[Lit], method: Method = "sat") -> bool:
        lits = frozenset(lits)
        if method == "mics":
            if not is_term(lits):
                return True
            return any(b <= lits for b in minimal_contradictions(self))
        memo = self._cache.setdefault("inconsistent", {})
        hit = memo.get(lits)
        if hit is None:
            hit = memo[lits] = not self.solver.satisfiable(lits)
        return hit

    def entails(self, lits: Iterable[Lit], f: Formula) -> bool:
        """``lits, Xi |- f``."""
        return not is_satisfiable((*self.theory, Not(f)), lits)


# -- terms --------------------------------------------------------------------


def is_term(lits: Iterable[Lit]) -> bool:
    lits = set(lits)
    return not any(-l in lits for l in lits)


def make_term(*items: Lit | str) -> Term:
    """Build a term from literals or signed names such as ``"!@d1.j1"``."""
    lits = frozenset(i if isinstance(i, Lit) else Lit.parse(i) for i in items)
    if not is_term(lits):
        raise ValueError("a term may not contain complementary literals")
    return lits


def positive_term(names: Iterable[str]) -> Term:
    return frozenset(Lit(n) for n in names)


def term_key(t: Iterable[Lit]) -> tuple:
    return clause_key(t)


def sort_terms(terms: Iterable[Term]) -> list[Term]:
    return sorted(terms, key=term_key)


def term_to_json(t: Iterable[Lit]) -> list[str]:
    return [str(l) for l in sorted(t, key=lambda l: l.key)]


def format_term(t: Iterable[Lit]) -> str:
    return "{" + ", ".join(term_to_json(t)) + "}"


def positive_part(t: Iterable[Lit]) -> frozenset[str]:
    return frozenset(l.name for l in t if l.positive)


# -- contradictions -------------------------------------------------------------


def is_inconsistent_term(system: ArgumentationSystem, term: Iterable[Lit], method: Method = "sat") -> bool:
    return system.inconsistent(term, method)


def minimal_contradictions(system: ArgumentationSystem, method: str = "marco") -> tuple[Term, ...]:
    """All subset-minimal inconsistent terms, canonically sorted.

    ``(frozenset(),)`` means the theory is inconsistent on its own; ``()``
    means no term is inconsistent. ``method`` selects the enumeration:
    ``"marco"`` alternates seeds between maximal consistent and minimal
    inconsistent sets, ``"levelwise"`` checks candidates by increasing size.
    """
    key = ("mics", method)
    hit = system._cache.get(key)
    if hit is not None:
        return hit
    if not system.solver.satisfiable():
        result: tuple[Term, ...] = (frozenset(),)
    elif method == "marco":
        result = _mics_marco(system)
    elif method == "levelwise":
        result = _mics_levelwise(system)
    else:
        raise ValueError(f"unknown method {method!r}")
    result = tuple(sort_terms(result))
    system._cache[key] = result
    if method == "marco":
        system._cache[("mics", "default")] = result
    return result


def _mics_levelwise(system: ArgumentationSystem) -> list[Term]:
    cands = system.candidate_literals()
    found: list[Term] = []
    for size in range(1, len(cands) + 1):
        any_consistent = False
        for combo in itertools.combinations(cands, size):
            t = frozenset(combo)
            if not is_term(t) or any(m <= t for m in found):
                continue
            if system.inconsistent(t):
                found.append(t)
            else:
                any_consistent = True
        if not any_consistent:
            break
    return found


def _mics_marco(system: ArgumentationSystem) -> list[Term]:
    cands = system.candidate_literals()
    if not cands:
        return []
    var = {lit: Lit(f"x{i:05d}") for i, lit in enumerate(cands)}
    map_clauses = [
        frozenset([-var[l], -var[-l]]) for l in cands if l.positive and -l in var
    ]
    muses: list[Term] = []
    while True:
        seed_model = Solver(map_clauses, [v.name for v in var.values()]).solve()
        if seed_model is None:
            return muses
        seed = frozenset(l for l in cands if seed_model[var[l].name])
        model = system.solver.solve(seed)
        if model is not None:
            mss = _grow(system, cands, model)
            map_clauses.append(frozenset(var[l] for l in cands if l not in mss))
        else:
            mus = _shrink(system, seed)
            muses.append(mus)
            map_clauses.append(frozenset(-var[l] for l in mus))


def _grow(system: ArgumentationSystem, cands: list[Lit], model: dict[str, bool]) -> set[Lit]:
    current = {l for l in cands if model[l.name] == l.positive}
    for l in cands:
        if l in current or -l in current:
            continue
        m = system.solver.solve(current | {l})
        if m is not None:
            current |= {x for x in cands if m[x.name] == x.positive}
    return current


def _shrink(system: ArgumentationSystem, seed: Iterable[Lit]) -> Term:
    core = set(seed)
    for l in sorted(core, key=lambda l: l.key):
        if not system.inconsistent(core - {l}):
            continue
        core.discard(l)
    return frozenset(core)


# -- safety and supporting arguments -------------------------------------------------


def compatible(a: Iterable[Lit], b: Iterable[Lit]) -> bool:
    """True iff ``a | b`` is still a term."""
    a = set(a)
    return not any(-l in a for l in b)


def is_safe_term(system: ArgumentationSystem, term: Iterable[Lit]) -> bool:
    """Every superset term of ``term`` is consistent with the theory.

    Decided by checking that no minimal contradiction is sign-compatible
    with ``term``.
    """
    term = frozenset(term)
    return not any(compatible(term, m) for m in minimal_contradictions(system))


def supporting_arguments(system: ArgumentationSystem, f: Formula) -> tuple[Term, ...]:
    """Subset-minimal safe terms that, with the theory, entail ``f``.

    Enumerates terms by increasing size over the assumptions occurring in the
    theory (``3**n`` candidates at worst), so it is meant for small systems.
    """
    names = sorted({l.name for c in clauses_of(system.theory) for l in c} & system.assumptions)
    found: list[Term] = []
    for size in range(len(names) + 1):
        for chosen in itertools.combinations(names, size):
            for signs in itertools.product((True, False), repeat=size):
                t = frozenset(Lit(n, s) for n, s in zip(chosen, signs))
                if any(m <= t for m in found):
                    continue
                if is_safe_term(system, t) and system.entails(t, f):
                    found.append(t)
    return tuple(sort_terms(found))


def maximal_negation(system: ArgumentationSystem, positive: Iterable[str]) -> Term:
    """The term asserting ``positive`` and negating every other assumption."""
    positive = frozenset(positive)
    return frozenset(Lit(a, a in positive) for a in system.assumptions)


def is_argument_positive_part(system: ArgumentationSystem, f: Formula, positive: Iterable[str]) -> bool:
    """True iff some supporting argument for ``f`` has exactly ``positive`` as positive part.

    This ranges over all supporting arguments, not only minimal ones. If any
    argument with that positive part exists, the maximally negated one does
    too: safety and entailment are both preserved by adding literals.
    """
    term = maximal_negation(system, positive)
    return is_safe_term(system, term) and system.entails(term, f)


# -- structures ---------------------------------------------------------------------


def is_structure(system: ArgumentationSystem, anchor: Iterable[Lit], irrelevant: Iterable[Lit], method: Method = "sat") -> bool:
    """Anchor consistent, and consistent with each irrelevant literal taken singly."""
    anchor = frozenset(anchor)
    if not is_term(anchor) or system.inconsistent(anchor, method):
        return False
    return all(not system.inconsistent(anchor | {l}, method) for l in irrelevant)


@dataclass(frozen=True)
class CJPair:
    """Consequential anchor with its set of justificational (irrelevant) assumptions.

    ``bottom`` marks the sink pair reached once a mapping leaves the
    structures.
    """

    anchor: frozenset[str] = frozenset()
    irrelevant: frozenset[str] = frozenset()
    bottom: bool = False

    def __str__(self) -> str:
        if self.bottom:
            return "<{false}, {}>"
        return f"<{format_term(positive_term(self.anchor))}, {format_term(positive_term(self.irrelevant))}>"


TOP_PAIR = CJPair()
SINK = CJPair(bottom=True)


def pair_is_structure(system: ArgumentationSystem, pair: CJPair, method: Method = "sat") -> bool:
    if pair.bottom:
        return False
    return is_structure(system, positive_term(pair.anchor), positive_term(pair.irrelevant), method)


def is_applicable(system: ArgumentationSystem, a: DefaultAssumption, anchor: Iterable[str], method: Method = "sat") -> bool:
    """Prerequisite derivable under ``anchor`` and every justification consistent with it."""
    base = positive_term(anchor)
    if not system.inconsistent(base | {Lit(a.prerequisite)}, method):
        return False
    return all(not system.inconsistent(base | {Lit(j)}, method) for j in a.justifications)


def apply_default(system: ArgumentationSystem, a: DefaultAssumption, pair: CJPair, method: Method = "sat") -> CJPair:
    if not pair_is_structure(system, pair, method):
        return SINK
    if not is_applicable(system, a, pair.anchor, method):
        return pair
    return CJPair(pair.anchor | {a.consequence}, pair.irrelevant | set(a.justifications))
