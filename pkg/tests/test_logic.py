import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defarg.formula import BOTTOM, TOP, conjoin, disjoin, parse_formula, theory_vocabulary, vocabulary, Atom
from defarg.logic import (
    Lit,
    Solver,
    clauses_of,
    entails,
    equivalent,
    find_model,
    forget,
    is_fresh,
    is_satisfiable,
    to_cnf,
)
from oracles import models, project, tt_entails, tt_satisfiable
from strategies import formulas, theories

P = lambda *texts: tuple(parse_formula(t, allow_reserved=True) for t in texts)  # noqa: E731

NAMES10 = tuple("abcdefghij")


def test_cnf_examples():
    f = parse_formula("b -> !a & !c")
    assert to_cnf(f) == {
        frozenset({Lit("b", False), Lit("a", False)}),
        frozenset({Lit("b", False), Lit("c", False)}),
    }
    assert to_cnf(TOP) == frozenset()
    assert to_cnf(BOTTOM) == {frozenset()}


def test_cnf_drops_tautologies():
    assert to_cnf(parse_formula("a | !a")) == frozenset()


def test_large_formula_uses_fresh_definitions():
    big = disjoin(conjoin([Atom(f"x{i}"), Atom(f"y{i}")]) for i in range(10))
    clauses = to_cnf(big)
    fresh = {l.name for cl in clauses for l in cl if is_fresh(l.name)}
    assert fresh
    # definitional encoding is equisatisfiable and preserves entailment over the original names
    assert entails((big, parse_formula("!x0 & !x1 & !x2 & !x3 & !x4 & !x5 & !x6 & !x7 & !x8")), parse_formula("x9 & y9"))


@pytest.mark.parametrize(
    "theory, units, expected",
    [
        (P("p", "!p"), (), False),
        ((), (), True),
        (P("e | o", "@d.p -> !e"), (Lit("@d.p"),), True),
    ],
)
def test_is_satisfiable_examples(theory, units, expected):
    assert is_satisfiable(theory, units) is expected
    assert tt_satisfiable(theory, units) is expected


def test_witness_model_for_derived_example():
    theory = P("e | o", "@d.p -> !e")
    model = find_model(theory, [Lit("@d.p")])
    assert model["@d.p"] and not model["e"] and model["o"]


@pytest.mark.parametrize(
    "theory, goal, expected",
    [
        (P("e | o", "!e"), "o", True),
        (P("b -> (!a & !c)", "b"), "!a", True),
        ((), "p", False),
    ],
)
def test_entails_examples(theory, goal, expected):
    assert entails(theory, parse_formula(goal)) is expected


def test_forget_examples():
    assert equivalent(forget(P("@d.c -> r", "e | o"), {"e", "o", "r"}), P("e | o"))
    assert equivalent(forget(P("p & q"), {"p", "q"}), P("p", "q"))
    assert equivalent(forget(P("@a1 -> p", "!p"), {"p"}), P("!p"))
    assert forget(P("p", "!p"), {"p"}) == (BOTTOM,)


def test_forget_derived_example_by_projection():
    t = P("@d.c -> r", "e | o")
    assert project(models(t), {"e", "o", "r"}) == set(models(P("e | o"), {"e", "o", "r"}))


def test_solver_is_reusable_across_assumptions():
    s = Solver(clauses_of(P("a -> b", "b -> c")))
    assert s.satisfiable([Lit("a")])
    assert not s.satisfiable([Lit("a"), Lit("c", False)])
    assert s.satisfiable([Lit("c", False)])


@settings(max_examples=150, deadline=None)
@given(theories(NAMES10, max_size=4, max_leaves=7), st.lists(st.sampled_from(NAMES10), max_size=3), st.data())
def test_satisfiable_matches_truth_table(theory, unit_names, data):
    units = tuple(Lit(n, data.draw(st.booleans())) for n in dict.fromkeys(unit_names))
    assert is_satisfiable(theory, units) == tt_satisfiable(theory, units)


@settings(max_examples=150, deadline=None)
@given(formulas(tuple("abcdefgh"), max_leaves=14))
def test_cnf_preserves_models(f):
    vocab = vocabulary(f)
    cnf_formula = conjoin(disjoin(l.to_formula() for l in cl) for cl in clauses_of([f]))
    fresh = vocabulary(cnf_formula) - vocab
    assert project(models([cnf_formula], vocab | fresh), vocab) == set(models([f], vocab))


@settings(max_examples=150, deadline=None)
@given(theories(tuple("abcdef"), max_size=3), st.sets(st.sampled_from("abcdef")))
def test_forget_equals_projection(theory, keep):
    vocab = theory_vocabulary(theory) | keep
    got = forget(theory, keep)
    assert theory_vocabulary(got) <= keep
    assert set(models(got, keep)) == project(models(theory, vocab), keep)


@settings(max_examples=100, deadline=None)
@given(theories(max_size=2), formulas(max_leaves=4), formulas(max_leaves=4))
def test_entailment_closure(t, f, g):
    if entails(t, f) and entails(t, f.implies(g)):
        assert entails(t, g)
    assert entails(t, f) == tt_entails(t, f)


def test_truth_table_oracle_sanity():
    assert len(models(P("a | b"))) == 3
    assert list(itertools.islice(models(()), 2)) == [frozenset()]
