"""Seeded random default theories and probe formulas for property checks."""

from __future__ import annotations

import random

from .formula import TOP, And, Atom, Formula, Implies, Not, Or, disjoin
from .theory import Default, DefaultTheory

NAMES = ("a", "b", "c", "d", "e", "f")


def random_literal(rng: random.Random, names) -> Formula:
    atom = Atom(rng.choice(names))
    return atom if rng.random() < 0.5 else Not(atom)


def random_formula(rng: random.Random, names, depth: int = 2) -> Formula:
    if depth <= 0 or rng.random() < 0.4:
        return random_literal(rng, names)
    op = rng.choice((And, Or, Implies, Not))
    if op is Not:
        return Not(random_formula(rng, names, depth - 1))
    return op(random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1))


def random_clause(rng: random.Random, names, max_len: int = 3) -> Formula:
    return disjoin(random_literal(rng, names) for _ in range(rng.randint(1, max_len)))


def random_theory(
    rng: random.Random,
    max_vars: int = 5,
    max_defaults: int = 5,
    max_justifications: int = 2,
    max_facts: int = 3,
    max_clause_len: int = 3,
) -> DefaultTheory:
    """A theory with clause-form facts and small defaults over at most ``max_vars`` names."""
    names = NAMES[: rng.randint(1, max_vars)]
    facts = tuple(random_clause(rng, names, max_clause_len) for _ in range(rng.randint(0, max_facts)))
    defaults = []
    for i in range(rng.randint(1, max_defaults)):
        pre = TOP if rng.random() < 0.4 else random_formula(rng, names, 1)
        jus = tuple(
            random_formula(rng, names, 1) for _ in range(rng.randint(1, max_justifications))
        )
        con = random_formula(rng, names, 1)
        defaults.append(Default(f"d{i + 1}", pre, jus, con))
    return DefaultTheory(facts, tuple(defaults))


def probe_formulas(rng: random.Random, names, count: int = 10) -> list[Formula]:
    names = tuple(sorted(names)) or NAMES[:1]
    return [random_formula(rng, names, rng.randint(0, 2)) for _ in range(count)]


def scaled_theory(num_defaults: int) -> DefaultTheory:
    """Theory with ``num_defaults`` defaults of fixed shape, for timing the translation."""
    defaults = tuple(
        Default(
            f"d{i}",
            Atom(f"p{i}"),
            (Atom(f"q{i}"), Not(Atom(f"r{i}"))),
            And(Atom(f"q{i}"), Atom(f"s{i}")),
        )
        for i in range(num_defaults)
    )
    return DefaultTheory((Or(Atom("p0"), Atom("q0")),), defaults)
