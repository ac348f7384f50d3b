import pytest
from hypothesis import given

from defarg.errors import ParseError, ReservedNameError
from defarg.formula import (
    BOTTOM,
    TOP,
    And,
    Atom,
    Implies,
    Not,
    Or,
    evaluate,
    parse_formula,
    to_text,
    vocabulary,
)
from strategies import formulas

a, b, c, e, o = (Atom(n) for n in "abceo")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("b -> !a & !c", Implies(b, And(Not(a), Not(c)))),
        ("true", TOP),
        ("false", BOTTOM),
        ("(e | o)", Or(e, o)),
        ("a -> b -> c", Implies(a, Implies(b, c))),
        ("a | b & c", Or(a, And(b, c))),
        ("a & b & c", And(And(a, b), c)),
        ("!!a", Not(Not(a))),
        ("  a  # trailing comment", a),
    ],
)
def test_parse(text, expected):
    assert parse_formula(text) == expected


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("a &", 1, 4),
        ("(a | b", 1, 7),
        ("a b", 1, 3),
        ("a\n  & $", 2, 5),
        ("", 1, 1),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_formula(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"{line}:{column}:")


def test_reserved_names_rejected_in_user_input():
    with pytest.raises(ReservedNameError):
        parse_formula("@d1.c -> r")
    assert parse_formula("@d1.c -> r", allow_reserved=True) == Implies(Atom("@d1.c"), Atom("r"))


def test_atom_namespace():
    assert Atom("p").namespace == "user"
    assert Atom("@d.p").namespace == "assumption"


def test_vocabulary():
    assert vocabulary(parse_formula("b -> !a & !c | true")) == {"a", "b", "c"}


def test_operators_build_nodes():
    assert (~a & b | c).implies(a) == Implies(Or(And(Not(a), b), c), a)


def test_evaluate_accepts_sets_and_dicts():
    f = parse_formula("a -> b")
    assert evaluate(f, {"b"})
    assert not evaluate(f, {"a": True, "b": False})


@given(formulas())
def test_print_parse_round_trip(f):
    assert parse_formula(to_text(f)) == f


@given(formulas())
def test_parse_print_parse_is_stable(f):
    once = parse_formula(to_text(f))
    assert parse_formula(to_text(once)) == once
