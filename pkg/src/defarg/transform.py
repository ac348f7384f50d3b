"""Embedding of a default theory into its propositional argumentation system.

Each default ``d = pre : jus_1, ..., jus_k / con`` contributes the formulas

    @d.p -> !pre,   @d.j<i> -> jus_i (i = 1..k),   @d.c -> con

to the argumentation theory, which starts with the facts. The output is
linear in the size of the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .argumentation import ArgumentationSystem
from .errors import AssumptionIndexError, UnknownDefaultError
from .formula import Atom, Formula, Implies, Not, to_text
from .theory import DefaultTheory, variables

Kind = Literal["p", "j", "c"]


@dataclass(frozen=True)
class DefaultAssumption:
    """The triple of fresh propositions standing for one default."""

    default: str
    prerequisite: str
    justifications: tuple[str, ...]
    consequence: str

    @property
    def names(self) -> tuple[str, ...]:
        return (self.prerequisite, *self.justifications, self.consequence)


def assumption_names(default: str, k: int) -> DefaultAssumption:
    return DefaultAssumption(
        default,
        f"@{default}.p",
        tuple(f"@{default}.j{i}" for i in range(1, k + 1)),
        f"@{default}.c",
    )


@dataclass(frozen=True)
class AssumptionRegistry:
    entries: tuple[DefaultAssumption, ...]
    _by_default: dict = field(init=False, repr=False, compare=False)
    _owner: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_default = {}
        owner = {}
        for a in self.entries:
            by_default[a.default] = a
            owner[a.prerequisite] = (a.default, "p", None)
            for i, j in enumerate(a.justifications, 1):
                owner[j] = (a.default, "j", i)
            owner[a.consequence] = (a.default, "c", None)
        object.__setattr__(self, "_by_default", by_default)
        object.__setattr__(self, "_owner", owner)

    def __getitem__(self, default: str) -> DefaultAssumption:
        try:
            return self._by_default[default]
        except KeyError:
            raise UnknownDefaultError(default) from None

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def prerequisitional(self) -> frozenset[str]:
        return frozenset(a.prerequisite for a in self.entries)

    @property
    def justificational(self) -> frozenset[str]:
        return frozenset(j for a in self.entries for j in a.justifications)

    @property
    def consequential(self) -> frozenset[str]:
        return frozenset(a.consequence for a in self.entries)

    @property
    def all(self) -> frozenset[str]:
        return frozenset(self._owner)

    def owner(self, assumption: str) -> tuple[str, Kind, int | None]:
        """``(default name, kind, justification index)`` of an assumption."""
        try:
            return self._owner[assumption]
        except KeyError:
            raise UnknownDefaultError(assumption) from None

    def defaults_of(self, anchor) -> tuple[str, ...]:
        """Default names whose consequential assumption is in ``anchor``, in Delta order."""
        anchor = set(anchor)
        return tuple(a.default for a in self.entries if a.consequence in anchor)


def default_formulas(a: DefaultAssumption, prerequisite: Formula, justifications, consequence):
    out = [Implies(Atom(a.prerequisite), Not(prerequisite))]
    out += [Implies(Atom(name), j) for name, j in zip(a.justifications, justifications)]
    out.append(Implies(Atom(a.consequence), consequence))
    return out


def translate(dt: DefaultTheory) -> ArgumentationSystem:
    """The argumentation system associated with ``dt``.

    Facts come first, then one block per default in theory order.

    >>> from defarg.theory import parse_theory
    >>> sys = translate(parse_theory("fact p. default d = p : q / !q."))
    >>> [str(f) for f in sys.theory]
    ['p', '@d.p -> !p', '@d.j1 -> q', '@d.c -> !q']
    """
    xi: list[Formula] = list(dt.facts)
    entries = []
    for d in dt.defaults:
        a = assumption_names(d.name, len(d.justifications))
        entries.append(a)
        xi.extend(default_formulas(a, d.prerequisite, d.justifications, d.consequence))
    registry = AssumptionRegistry(tuple(entries))
    return ArgumentationSystem(
        tuple(xi), registry.all, registry=registry, source_vars=variables(dt)
    )


def assumption_of(reg: AssumptionRegistry, default: str, kind: Kind, index: int | None = None) -> str:
    a = reg[default]
    if kind == "j":
        if index is None or not 1 <= index <= len(a.justifications):
            raise AssumptionIndexError(
                f"default {default!r} has {len(a.justifications)} justification(s), index {index!r}"
            )
        return a.justifications[index - 1]
    if index is not None:
        raise AssumptionIndexError(f"kind {kind!r} takes no index")
    if kind == "p":
        return a.prerequisite
    if kind == "c":
        return a.consequence
    raise ValueError(f"unknown assumption kind {kind!r}")


def system_to_json(system: ArgumentationSystem) -> dict:
    return {
        "xi": [to_text(f) for f in system.theory],
        "assumptions": {
            a.default: {"p": a.prerequisite, "j": list(a.justifications), "c": a.consequence}
            for a in system.registry
        },
    }


def system_to_text(system: ArgumentationSystem) -> str:
    """Theory-file rendering of the argumentation theory, assumptions as comments."""
    lines = [f"fact {to_text(f)}." for f in system.theory]
    for a in system.registry:
        jus = " ".join(a.justifications)
        lines.append(f"# {a.default}: p={a.prerequisite} j={jus} c={a.consequence}")
    return "\n".join(lines) + "\n"
