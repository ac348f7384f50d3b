"""Classical propositional machinery: CNF, DPLL satisfiability, entailment, forgetting.

Everything here is a pure function of its arguments. Clause sets are
``frozenset``s of clauses, each clause a ``frozenset`` of :class:`Lit`.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, NamedTuple, Sequence

from .formula import (
    BOTTOM,
    TOP,
    And,
    Atom,
    Falsum,
    Formula,
    Implies,
    Not,
    Or,
    Verum,
    disjoin,
)

Clause = frozenset  # frozenset[Lit]
ClauseSet = frozenset  # frozenset[Clause]

#: Distributed CNF larger than this many literals switches to definitional form.
CNF_LITERAL_LIMIT = 64

_FRESH = "@~"


class Lit(NamedTuple):
    name: str
    positive: bool = True

    def __neg__(self) -> Lit:
        return Lit(self.name, not self.positive)

    def __str__(self) -> str:
        return self.name if self.positive else "!" + self.name

    @property
    def key(self) -> tuple[str, int]:
        """Canonical sort key: by name, positive before negative."""
        return (self.name, 0 if self.positive else 1)

    def to_formula(self) -> Formula:
        return Atom(self.name) if self.positive else Not(Atom(self.name))

    @classmethod
    def parse(cls, text: str) -> Lit:
        text = text.strip()
        if text.startswith("!"):
            return cls(text[1:].strip(), False)
        return cls(text, True)


def clause_key(clause: Iterable[Lit]) -> tuple:
    return tuple(sorted(lit.key for lit in clause))


def sorted_clauses(clauses: Iterable[Clause]) -> list[Clause]:
    return sorted(clauses, key=clause_key)


def clause_to_formula(clause: Iterable[Lit]) -> Formula:
    lits = sorted(clause, key=lambda l: l.key)
    return disjoin(lit.to_formula() for lit in lits)


def is_fresh(name: str) -> bool:
    return name.startswith(_FRESH)


# -- CNF ----------------------------------------------------------------------


class _TooLarge(Exception):
    pass


def _nnf(f: Formula, positive: bool = True):
    """Negation normal form as nested tuples: ("lit", Lit) | ("and"|"or", [...]) | True | False."""
    if isinstance(f, Atom):
        return ("lit", Lit(f.name, positive))
    if isinstance(f, Verum):
        return positive
    if isinstance(f, Falsum):
        return not positive
    if isinstance(f, Not):
        return _nnf(f.arg, not positive)
    if isinstance(f, And):
        op = "and" if positive else "or"
        return _join(op, _nnf(f.left, positive), _nnf(f.right, positive))
    if isinstance(f, Or):
        op = "or" if positive else "and"
        return _join(op, _nnf(f.left, positive), _nnf(f.right, positive))
    if isinstance(f, Implies):
        op = "or" if positive else "and"
        return _join(op, _nnf(f.left, not positive), _nnf(f.right, positive))
    raise TypeError(f"not a formula: {f!r}")


def _join(op: str, a, b):
    absorbing, neutral = (False, True) if op == "and" else (True, False)
    if a is absorbing or b is absorbing:
        return absorbing
    if a is neutral:
        return b
    if b is neutral:
        return a
    parts = []
    for x in (a, b):
        if x[0] == op:
            parts.extend(x[1])
        else:
            parts.append(x)
    return (op, parts)


def _drop_tautologies(clauses: Iterable[Clause]) -> set[Clause]:
    return {c for c in clauses if not any(-l in c for l in c)}


def _distribute(node, budget: list[int]) -> set[Clause]:
    if node is True:
        return set()
    if node is False:
        return {frozenset()}
    if node[0] == "lit":
        budget[0] -= 1
        if budget[0] < 0:
            raise _TooLarge
        return {frozenset([node[1]])}
    if node[0] == "and":
        out: set[Clause] = set()
        for child in node[1]:
            out |= _distribute(child, budget)
        return out
    acc: set[Clause] = {frozenset()}
    for child in node[1]:
        part = _distribute(child, budget)
        size = sum(len(a) + len(b) for a in acc for b in part)
        budget[0] -= size
        if budget[0] < 0:
            raise _TooLarge
        acc = _drop_tautologies(a | b for a in acc for b in part)
    return acc


def _definitional(node) -> set[Clause]:
    """Plaisted-Greenbaum encoding of an NNF tree; fresh names ``@~<k>``."""
    counter = itertools.count(1)
    out: set[Clause] = set()

    def encode(n) -> Lit:
        if n[0] == "lit":
            return n[1]
        children = [encode(c) for c in n[1]]
        x = Lit(f"{_FRESH}{next(counter)}")
        if n[0] == "and":
            out.update(frozenset([-x, c]) for c in children)
        else:
            out.add(frozenset([-x, *children]))
        return x

    out.add(frozenset([encode(node)]))
    return _drop_tautologies(out)


@functools.lru_cache(maxsize=65536)
def to_cnf(f: Formula) -> ClauseSet:
    """Clause form of ``f``.

    Structural distribution is used while the result stays within
    :data:`CNF_LITERAL_LIMIT` literals, giving an equivalent clause set.
    Larger formulas get a definitional encoding whose fresh ``@~k`` variables
    are existentially quantified: the result is equivalent to ``f`` once
    they are forgotten. Tautologous clauses are dropped.
    """
    node = _nnf(f)
    if node is True:
        return frozenset()
    if node is False:
        return frozenset([frozenset()])
    try:
        clauses = _distribute(node, [CNF_LITERAL_LIMIT])
    except _TooLarge:
        clauses = _definitional(node)
    return frozenset(_drop_tautologies(clauses))


def clauses_of(theory: Iterable[Formula]) -> list[Clause]:
    """Union of the clause forms of ``theory``; fresh names are made distinct per formula."""
    out: list[Clause] = []
    seen: set[Clause] = set()
    for i, f in enumerate(theory):
        cnf = to_cnf(f)
        for c in cnf:
            if any(is_fresh(l.name) for l in c):
                c = frozenset(
                    Lit(f"{l.name}.{i}", l.positive) if is_fresh(l.name) else l for l in c
                )
            if c not in seen:
                seen.add(c)
                out.append(c)
    return out


# -- DPLL ---------------------------------------------------------------------


class Solver:
    """DPLL over a fixed clause base, queried under unit assumptions.

    Variables are numbered by sorted name, and branching always picks the
    lowest unassigned variable, trying ``false`` first. No state survives a
    call to :meth:`solve`, so one instance may be shared between threads.
    """

    def __init__(self, clauses: Iterable[Iterable[Lit]], extra_names: Iterable[str] = ()):
        clauses = [frozenset(c) for c in clauses]
        names = {l.name for c in clauses for l in c} | set(extra_names)
        self.names: list[str] = sorted(names)
        self.index: dict[str, int] = {n: i + 1 for i, n in enumerate(self.names)}
        self.nvars = len(self.names)
        self._empty = False
        units: list[int] = []
        long: list[tuple[int, ...]] = []
        for c in clauses:
            ints = tuple(sorted({self._int(l) for l in c}))
            if any(-x in ints for x in ints):
                continue
            if not ints:
                self._empty = True
            elif len(ints) == 1:
                units.append(ints[0])
            else:
                long.append(ints)
        self._units = units
        self._clauses = long
        watches: list[list[int]] = [[] for _ in range(2 * self.nvars + 2)]
        for ci, c in enumerate(long):
            watches[_widx(c[0])].append(ci)
            watches[_widx(c[1])].append(ci)
        self._watches = watches

    def _int(self, lit: Lit) -> int:
        v = self.index[lit.name]
        return v if lit.positive else -v

    def solve(self, assumptions: Iterable[Lit] = ()) -> dict[str, bool] | None:
        """A model of the clause base plus ``assumptions``, or ``None``.

        Assumption literals over names unknown to the base are ignored in the
        search but reported in the model.
        """
        extra: dict[str, bool] = {}
        ints: list[int] = []
        for lit in assumptions:
            v = self.index.get(lit.name)
            if v is None:
                if extra.get(lit.name, lit.positive) != lit.positive:
                    return None
                extra[lit.name] = lit.positive
            else:
                ints.append(v if lit.positive else -v)
        values = self._search(ints)
        if values is None:
            return None
        model = {n: values[i + 1] > 0 for i, n in enumerate(self.names)}
        model.update(extra)
        return model

    def satisfiable(self, assumptions: Iterable[Lit] = ()) -> bool:
        return self.solve(assumptions) is not None

    def _search(self, assumptions: Sequence[int]) -> list[int] | None:
        if self._empty:
            return None
        n = self.nvars
        value = [0] * (n + 1)
        clauses = [list(c) for c in self._clauses]
        watches = [list(w) for w in self._watches]
        trail: list[int] = []

        def assign(lit: int) -> bool:
            v = value[abs(lit)]
            if v == 0:
                value[abs(lit)] = 1 if lit > 0 else -1
                trail.append(lit)
                return True
            return (v > 0) == (lit > 0)

        def propagate(head: int) -> bool:
            while head < len(trail):
                false_lit = -trail[head]
                head += 1
                wl = watches[_widx(false_lit)]
                i = 0
                while i < len(wl):
                    ci = wl[i]
                    c = clauses[ci]
                    if c[0] == false_lit:
                        c[0], c[1] = c[1], c[0]
                    other = c[0]
                    ov = value[abs(other)]
                    if ov != 0 and (ov > 0) == (other > 0):
                        i += 1
                        continue
                    for k in range(2, len(c)):
                        lk = c[k]
                        vk = value[abs(lk)]
                        if vk == 0 or (vk > 0) == (lk > 0):
                            c[1], c[k] = lk, c[1]
                            watches[_widx(lk)].append(ci)
                            wl[i] = wl[-1]
                            wl.pop()
                            break
                    else:
                        if ov == 0:
                            value[abs(other)] = 1 if other > 0 else -1
                            trail.append(other)
                            i += 1
                        else:
                            return False
            return True

        for lit in itertools.chain(self._units, assumptions):
            if not assign(lit):
                return None
        if not propagate(0):
            return None

        decisions: list[tuple[int, int, bool]] = []
        next_var = 1
        while True:
            while next_var <= n and value[next_var] != 0:
                next_var += 1
            if next_var > n:
                return value
            decisions.append((len(trail), next_var, False))
            mark = len(trail)
            assign(-next_var)
            ok = propagate(mark)
            while not ok:
                while True:
                    if not decisions:
                        return None
                    mark, var, flipped = decisions.pop()
                    for lit in trail[mark:]:
                        value[abs(lit)] = 0
                    del trail[mark:]
                    if not flipped:
                        break
                next_var = min(next_var, var)
                decisions.append((mark, var, True))
                assign(var)
                ok = propagate(mark)
            next_var = 1


def _widx(lit: int) -> int:
    return 2 * lit if lit > 0 else -2 * lit + 1


# -- satisfiability, entailment ---------------------------------------------


@functools.lru_cache(maxsize=4096)
def _solver_for(theory: tuple[Formula, ...]) -> Solver:
    return Solver(clauses_of(theory))


def find_model(theory: Iterable[Formula], units: Iterable[Lit] = ()) -> dict[str, bool] | None:
    return _solver_for(tuple(theory)).solve(units)


def is_satisfiable(theory: Iterable[Formula], units: Iterable[Lit] = ()) -> bool:
    """True iff ``theory`` together with the unit literals has a model."""
    return find_model(theory, units) is not None


def entails(theory: Iterable[Formula], f: Formula) -> bool:
    """``theory |- f``, decided as unsatisfiability of ``theory + {!f}``."""
    return not is_satisfiable((*theory, Not(f)))


def equivalent(t1: Iterable[Formula], t2: Iterable[Formula]) -> bool:
    t1, t2 = tuple(t1), tuple(t2)
    return all(entails(t1, f) for f in t2) and all(entails(t2, f) for f in t1)


# -- forgetting -----------------------------------------------------------------


def subsumption_reduce(clauses: Iterable[Clause]) -> list[Clause]:
    """Drop clauses strictly subsumed by (or duplicating) another clause."""
    kept: list[Clause] = []
    for c in sorted(set(clauses), key=lambda c: (len(c), clause_key(c))):
        if not any(k <= c for k in kept):
            kept.append(c)
    return kept


def eliminate(clauses: Iterable[Clause], keep: Iterable[str]) -> list[Clause]:
    """Resolve away every variable outside ``keep`` (Davis-Putnam elimination).

    Returns a subsumption-minimal clause list, canonically sorted, equivalent
    to the existential projection of ``clauses`` onto ``keep``.
    """
    keep = set(keep)
    current = subsumption_reduce(_drop_tautologies(clauses))
    while True:
        if frozenset() in current:
            return [frozenset()]
        todo = {l.name for c in current for l in c} - keep
        if not todo:
            return sorted_clauses(current)

        def cost(name: str):
            pos = sum(1 for c in current if Lit(name, True) in c)
            neg = sum(1 for c in current if Lit(name, False) in c)
            return (pos * neg - pos - neg, name)

        var = min(todo, key=cost)
        p, n = Lit(var, True), Lit(var, False)
        pos = [c for c in current if p in c]
        neg = [c for c in current if n in c]
        rest = [c for c in current if p not in c and n not in c]
        resolvents = _drop_tautologies((a - {p}) | (b - {n}) for a in pos for b in neg)
        current = subsumption_reduce(itertools.chain(rest, resolvents))


def forget(theory: Iterable[Formula], keep: Iterable[str]) -> tuple[Formula, ...]:
    """Marginal of ``theory`` on the vocabulary ``keep``.

    The result mentions only names in ``keep`` and has exactly the
    consequences of ``theory`` that are expressible over ``keep``. It is
    returned as a subsumption-minimal, sorted tuple of clauses.
    """
    reduced = eliminate(clauses_of(theory), keep)
    if reduced == [frozenset()] or not Solver(reduced).satisfiable():
        return (BOTTOM,)
    return tuple(clause_to_formula(c) for c in reduced)


__all__ = [
    "CNF_LITERAL_LIMIT",
    "Clause",
    "ClauseSet",
    "Lit",
    "Solver",
    "TOP",
    "clause_key",
    "clause_to_formula",
    "clauses_of",
    "eliminate",
    "entails",
    "equivalent",
    "find_model",
    "forget",
    "is_fresh",
    "is_satisfiable",
    "sorted_clauses",
    "subsumption_reduce",
    "to_cnf",
]
