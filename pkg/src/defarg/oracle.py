"""Brute-force Reiter extensions: guess a set of generating defaults, then verify it.

Independent of the argumentation machinery; it only shares the
satisfiability and entailment substrate. Exponential in the number of
defaults.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import BoundExceededError
from .formula import Formula, to_text
from .logic import entails, equivalent, forget, is_satisfiable
from .theory import Default, DefaultTheory, variables

DEFAULT_MAX_DEFAULTS = 12


@dataclass(frozen=True)
class CandidateExtension:
    generating_defaults: tuple[str, ...]
    base: tuple[Formula, ...]
    inconsistent: bool = False


def _base(dt: DefaultTheory, chosen: Iterable[Default]) -> tuple[Formula, ...]:
    return tuple(dict.fromkeys([*dt.facts, *(d.consequence for d in chosen)]))


def generating_defaults(dt: DefaultTheory, guess: tuple[Formula, ...]) -> tuple[str, ...]:
    """Defaults applied by the stage-wise construction when ``Th(guess)`` is the candidate."""
    blocked = {
        d.name
        for d in dt.defaults
        if any(not is_satisfiable((*guess, j)) for j in d.justifications)
    }
    applied: list[Default] = []
    stage = tuple(dt.facts)
    while True:
        new = [
            d for d in dt.defaults
            if d not in applied and d.name not in blocked and entails(stage, d.prerequisite)
        ]
        if not new:
            return tuple(d.name for d in dt.defaults if d in applied)
        applied.extend(new)
        stage = _base(dt, applied)


def is_extension(dt: DefaultTheory, chosen: Iterable[str]) -> bool:
    """True iff ``Th(facts + con(chosen))`` is an extension generated by exactly ``chosen``."""
    chosen = set(chosen)
    unknown = chosen - set(dt.names)
    if unknown:
        raise KeyError(sorted(unknown)[0])
    picked = [d for d in dt.defaults if d.name in chosen]
    guess = _base(dt, picked)
    gd = generating_defaults(dt, guess)
    if set(gd) != chosen:
        return False
    return equivalent(_base(dt, [dt.default(n) for n in gd]), guess)


def oracle_extensions(dt: DefaultTheory, max_defaults: int = DEFAULT_MAX_DEFAULTS) -> tuple[CandidateExtension, ...]:
    """All extensions, one per equivalence class of bases, smallest generating sets first."""
    if len(dt.defaults) > max_defaults:
        raise BoundExceededError(
            f"{len(dt.defaults)} defaults exceed the oracle bound of {max_defaults}"
        )
    if not is_satisfiable(dt.facts):
        return (CandidateExtension((), tuple(dt.facts), inconsistent=True),)
    found: list[CandidateExtension] = []
    names = dt.names
    for size in range(len(names) + 1):
        for chosen in itertools.combinations(names, size):
            if not is_extension(dt, chosen):
                continue
            base = _base(dt, [dt.default(n) for n in chosen])
            if any(equivalent(base, e.base) for e in found):
                continue
            found.append(CandidateExtension(chosen, base))
    return tuple(found)


def oracle_classification(dt: DefaultTheory, found: tuple[CandidateExtension, ...]) -> str:
    if len(found) == 1 and found[0].inconsistent:
        return "inconsistent-facts"
    if not found:
        return "no-extension"
    if len(found) == 1 and not found[0].generating_defaults:
        return "unique-trivial"
    return f"extensions({len(found)})"


def oracle_report(dt: DefaultTheory, with_marginal: bool = False) -> dict:
    """Same schema as the reasoner's extension report, for diffing."""
    found = oracle_extensions(dt)
    keep = variables(dt)
    entries = []
    for e in found:
        if e.inconsistent:
            continue
        entry = {
            "defaultTerm": sorted(f"@{n}.c" for n in e.generating_defaults),
            "generatingDefaults": list(e.generating_defaults),
        }
        if with_marginal:
            entry["marginal"] = [to_text(f) for f in forget(e.base, keep)]
        entries.append(entry)
    entries.sort(key=lambda e: e["defaultTerm"])
    return {"classification": oracle_classification(dt, found), "extensions": entries}


def oracle_credulous(dt: DefaultTheory, f: Formula, found=None) -> bool:
    found = oracle_extensions(dt) if found is None else found
    return any(entails(e.base, f) for e in found if not e.inconsistent)


def oracle_skeptical(dt: DefaultTheory, f: Formula, found=None) -> bool:
    found = oracle_extensions(dt) if found is None else found
    return all(entails(e.base, f) for e in found if not e.inconsistent)


__all__ = [
    "CandidateExtension",
    "DEFAULT_MAX_DEFAULTS",
    "generating_defaults",
    "is_extension",
    "oracle_classification",
    "oracle_credulous",
    "oracle_extensions",
    "oracle_report",
    "oracle_skeptical",
]
