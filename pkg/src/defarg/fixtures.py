"""Small worked default theories used by ``selftest`` and the test-suite."""

from __future__ import annotations

from .theory import DefaultTheory, parse_theory

THEORIES: dict[str, str] = {
    # two extensions: facts + {a, c} and facts + {b}
    "abc": """
        fact b -> !a & !c.
        default d1 = true : a / a.
        default d2 = true : b / b.
        default d3 = true : c / c.
    """,
    # no extension at all
    "selfdefeat": "default d1 = true : p / !p.",
    # only extension is Th({p, q})
    "blocked": """
        fact p. fact q.
        default d1 = p : !q / !q.
    """,
    "eo2": """
        fact e | o.
        default d1 = e : r / r.
        default d2 = o : r / r.
    """,
    "eo1": """
        fact e | o.
        default d = e : r / r.
    """,
    "pnotp": """
        fact p. fact !p.
        default d = p : q / q.
    """,
    "nox": "default d = true : !p / p.",
    "pq": """
        fact p.
        default d = p : q / !q.
    """,
    "twofree": """
        default d1 = true : p / p.
        default d2 = true : q / q.
    """,
    "chain": """
        default d1 = true : c / !d.
        default d2 = true : d / !e.
        default d3 = true : e / !f.
    """,
    "bd": """
        fact b -> d. fact c -> d.
        default d1 = true : !c / b.
        default d2 = true : !b / c.
    """,
}


def load(name: str) -> DefaultTheory:
    return parse_theory(THEORIES[name])
