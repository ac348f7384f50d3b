import pytest
from hypothesis import given, settings

from defarg import fixtures
from defarg.errors import BoundExceededError
from defarg.formula import parse_formula
from defarg.generate import scaled_theory
from defarg.logic import entails, equivalent, is_satisfiable
from defarg.oracle import (
    is_extension,
    oracle_classification,
    oracle_credulous,
    oracle_extensions,
    oracle_report,
    oracle_skeptical,
)
from strategies import default_theories


def F(*texts):
    return tuple(parse_formula(t) for t in texts)


def test_is_extension_examples():
    abc = fixtures.load("abc")
    assert is_extension(abc, {"d1", "d3"})
    assert is_extension(abc, {"d2"})
    assert not is_extension(abc, {"d1", "d2"})
    selfdefeat = fixtures.load("selfdefeat")
    assert not is_extension(selfdefeat, set())
    assert not is_extension(selfdefeat, {"d1"})


def test_derived_abc_counterexample_base_is_inconsistent():
    assert not is_satisfiable(F("b -> !a & !c", "a", "b"))


def test_oracle_extensions_examples():
    abc = oracle_extensions(fixtures.load("abc"))
    assert len(abc) == 2
    facts = fixtures.load("abc").facts
    assert any(equivalent(e.base, (*facts, *F("a", "c"))) for e in abc)
    assert any(equivalent(e.base, (*facts, *F("b"))) for e in abc)
    (blocked,) = oracle_extensions(fixtures.load("blocked"))
    assert equivalent(blocked.base, F("p", "q"))
    assert oracle_extensions(fixtures.load("selfdefeat")) == ()


def test_inconsistent_facts_marker():
    dt = fixtures.load("pnotp")
    found = oracle_extensions(dt)
    assert len(found) == 1 and found[0].inconsistent
    assert oracle_classification(dt, found) == "inconsistent-facts"


def test_bound():
    with pytest.raises(BoundExceededError):
        oracle_extensions(scaled_theory(13))


def test_oracle_queries():
    bd = fixtures.load("bd")
    assert oracle_credulous(bd, parse_formula("b"))
    assert oracle_skeptical(bd, parse_formula("b | c"))
    assert not oracle_skeptical(bd, parse_formula("b"))


def test_report_matches_reasoner_schema():
    report = oracle_report(fixtures.load("chain"), with_marginal=True)
    assert report["classification"] == "extensions(1)"
    (ext,) = report["extensions"]
    assert ext["defaultTerm"] == ["@d1.c", "@d3.c"]
    assert ext["generatingDefaults"] == ["d1", "d3"]


@settings(max_examples=80, deadline=None)
@given(default_theories(max_defaults=4))
def test_extensions_are_sound_and_distinct(dt):
    found = oracle_extensions(dt)
    if not is_satisfiable(dt.facts):
        return
    for i, e in enumerate(found):
        assert is_satisfiable(e.base)
        assert all(not equivalent(e.base, other.base) for other in found[i + 1:])
        for name in e.generating_defaults:
            d = dt.default(name)
            assert entails(e.base, d.prerequisite)
            assert all(is_satisfiable((*e.base, j)) for j in d.justifications)
