import pytest
from hypothesis import given

from defarg import fixtures
from defarg.errors import ParseError, ReservedNameError, TheoryError
from defarg.formula import Atom, Not, Or, parse_formula
from defarg.theory import Default, DefaultTheory, format_theory, parse_theory, select, variables
from strategies import default_theories

e, o, r, p, q = (Atom(n) for n in "eorpq")


def test_parse_eo_theory():
    dt = parse_theory("fact e | o. default d1 = e : r / r. default d2 = o : r / r.")
    assert dt == DefaultTheory((Or(e, o),), (Default("d1", e, (r,), r), Default("d2", o, (r,), r)))


def test_parse_facts_only():
    assert parse_theory("fact p. fact q.") == DefaultTheory((p, q), ())


def test_facts_are_deduplicated():
    assert parse_theory("fact p. fact p.").facts == (p,)


def test_missing_consequence():
    with pytest.raises(ParseError):
        parse_theory("default d = true : a /.")


@pytest.mark.parametrize(
    "text",
    [
        "default d = true : / a.",
        "default d = true : a / a. default d = true : b / b.",
        "fact p",
        "rule p.",
        "default = p : q / q.",
    ],
)
def test_malformed_theories(text):
    with pytest.raises(ParseError):
        parse_theory(text)


def test_reserved_name_in_theory():
    with pytest.raises(ReservedNameError):
        parse_theory("fact @x.")


def test_error_position_is_reported():
    with pytest.raises(ParseError) as info:
        parse_theory("fact p.\ndefault d = p : q q.")
    assert info.value.line == 2


def test_constructor_validation():
    with pytest.raises(TheoryError):
        Default("d", p, (), q)
    with pytest.raises(TheoryError):
        DefaultTheory((), (Default("d", p, (q,), q), Default("d", q, (p,), p)))


def test_select_examples():
    eo = fixtures.load("eo2")
    assert set(select(eo.defaults, "con")) == {r}
    assert select((), "pre") == ()
    blocked = fixtures.load("blocked")
    assert select([blocked.default("d1")], "jus") == (Not(q),)


def test_variables_examples():
    assert variables(fixtures.load("abc")) == {"a", "b", "c"}
    assert variables(DefaultTheory((), ())) == frozenset()
    assert variables(fixtures.load("blocked")) == {"p", "q"}


def test_multiple_justifications():
    dt = parse_theory("default d = a : b, !c / d.")
    assert dt.default("d").justifications == (Atom("b"), parse_formula("!c"))


@given(default_theories())
def test_format_parse_round_trip(dt):
    assert parse_theory(format_theory(dt)) == dt
    again = parse_theory(format_theory(dt))
    assert parse_theory(format_theory(again)) == again


@given(default_theories(), default_theories())
def test_select_distributes_over_union(t1, t2):
    d1 = list(t1.defaults)
    d2 = [Default(f"x{d.name}", d.prerequisite, d.justifications, d.consequence) for d in t2.defaults]
    for which in ("pre", "jus", "con"):
        assert set(select(d1 + d2, which)) == set(select(d1, which)) | set(select(d2, which))
