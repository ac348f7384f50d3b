"""Propositional formulas: AST, tokenizer, parser and canonical printer.

Grammar (whitespace insignificant)::

    formula := implication
    implication := disjunction ("->" implication)?      # right-associative
    disjunction := conjunction ("|" conjunction)*
    conjunction := unary ("&" unary)*
    unary := "!" unary | "(" formula ")" | "true" | "false" | NAME

User atoms match ``[A-Za-z_][A-Za-z0-9_]*``. Names starting with ``@`` belong
to the assumption namespace and are only accepted with ``allow_reserved=True``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Union

from .errors import ParseError, ReservedNameError

RESERVED = "@"
_USER_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Formula:
    """Common base of all AST nodes; supports ``~``, ``&`` and ``|``."""

    __slots__ = ()

    def __invert__(self) -> Not:
        return Not(self)

    def __and__(self, other: Formula) -> And:
        return And(self, other)

    def __or__(self, other: Formula) -> Or:
        return Or(self, other)

    def implies(self, other: Formula) -> Implies:
        return Implies(self, other)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    @property
    def namespace(self) -> str:
        return "assumption" if self.name.startswith(RESERVED) else "user"


@dataclass(frozen=True, slots=True)
class Verum(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Falsum(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula


TOP = Verum()
BOTTOM = Falsum()

AnyFormula = Union[Atom, Verum, Falsum, Not, And, Or, Implies]


def is_user_name(name: str) -> bool:
    return bool(_USER_NAME.match(name))


def vocabulary(f: Formula) -> frozenset[str]:
    """Names of all atoms occurring in ``f``."""
    out: set[str] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            out.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.arg)
        elif isinstance(node, (And, Or, Implies)):
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(out)


def theory_vocabulary(formulas) -> frozenset[str]:
    out: set[str] = set()
    for f in formulas:
        out |= vocabulary(f)
    return frozenset(out)


def conjoin(formulas) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``true``."""
    result = None
    for f in formulas:
        result = f if result is None else And(result, f)
    return TOP if result is None else result


def disjoin(formulas) -> Formula:
    result = None
    for f in formulas:
        result = f if result is None else Or(result, f)
    return BOTTOM if result is None else result


def evaluate(f: Formula, model) -> bool:
    """Truth value of ``f`` under ``model`` (a mapping or set of true names)."""
    if isinstance(f, Atom):
        return f.name in model if isinstance(model, (set, frozenset)) else bool(model[f.name])
    if isinstance(f, Verum):
        return True
    if isinstance(f, Falsum):
        return False
    if isinstance(f, Not):
        return not evaluate(f.arg, model)
    if isinstance(f, And):
        return evaluate(f.left, model) and evaluate(f.right, model)
    if isinstance(f, Or):
        return evaluate(f.left, model) or evaluate(f.right, model)
    if isinstance(f, Implies):
        return (not evaluate(f.left, model)) or evaluate(f.right, model)
    raise TypeError(f"not a formula: {f!r}")


# -- printing ---------------------------------------------------------------

_IMP, _OR, _AND, _NOT, _ATOM = 1, 2, 3, 4, 5


def _prec(f: Formula) -> int:
    if isinstance(f, Implies):
        return _IMP
    if isinstance(f, Or):
        return _OR
    if isinstance(f, And):
        return _AND
    if isinstance(f, Not):
        return _NOT
    return _ATOM


def to_text(f: Formula) -> str:
    """Print ``f`` with the fewest parentheses that still re-parse to ``f``."""

    def wrap(g: Formula, minimum: int) -> str:
        text = to_text(g)
        return f"({text})" if _prec(g) < minimum else text

    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Verum):
        return "true"
    if isinstance(f, Falsum):
        return "false"
    if isinstance(f, Not):
        return "!" + wrap(f.arg, _NOT)
    if isinstance(f, And):
        return f"{wrap(f.left, _AND)} & {wrap(f.right, _AND + 1)}"
    if isinstance(f, Or):
        return f"{wrap(f.left, _OR)} | {wrap(f.right, _OR + 1)}"
    if isinstance(f, Implies):
        return f"{wrap(f.left, _IMP + 1)} -> {wrap(f.right, _IMP)}"
    raise TypeError(f"not a formula: {f!r}")


# -- lexing -----------------------------------------------------------------


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<arrow>->)
  | (?P<reserved>@[A-Za-z0-9_]+(?:\.[A-Za-z0-9_]+)*)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[!&|()\.:,/=])
    """,
    re.VERBOSE,
)

_PUNCT_KINDS = {
    "!": "NOT", "&": "AND", "|": "OR", "(": "LPAREN", ")": "RPAREN",
    ".": "DOT", ":": "COLON", ",": "COMMA", "/": "SLASH", "=": "EQ",
}


def tokenize(text: str, allow_reserved: bool = False) -> Iterator[Token]:
    """Yield tokens followed by a final ``EOF`` token."""
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if m is None:
            if text[pos] == RESERVED:
                raise ReservedNameError("'@' is reserved for assumptions", line, column)
            raise ParseError(f"unexpected character {text[pos]!r}", line, column)
        kind = m.lastgroup
        value = m.group()
        if kind == "newline":
            line += 1
            line_start = m.end()
        elif kind == "reserved":
            if not allow_reserved:
                raise ReservedNameError(
                    f"identifier {value!r} uses the reserved '@' namespace", line, column
                )
            yield Token("NAME", value, line, column)
        elif kind == "name":
            if m.end() < len(text) and text[m.end()] == RESERVED:
                raise ReservedNameError(
                    "'@' may not appear inside an identifier", line, m.end() - line_start + 1
                )
            if value == "true":
                yield Token("TRUE", value, line, column)
            elif value == "false":
                yield Token("FALSE", value, line, column)
            else:
                yield Token("NAME", value, line, column)
        elif kind == "arrow":
            yield Token("IMP", value, line, column)
        elif kind == "punct":
            yield Token(_PUNCT_KINDS[value], value, line, column)
        pos = m.end()
    yield Token("EOF", "", line, pos - line_start + 1)


class TokenStream:
    """One-token lookahead over :func:`tokenize` output."""

    def __init__(self, tokens: Iterator[Token]):
        self._tokens = list(tokens)
        self._i = 0

    @property
    def peek(self) -> Token:
        return self._tokens[self._i]

    def next(self) -> Token:
        tok = self._tokens[self._i]
        if tok.kind != "EOF":
            self._i += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.peek
        if tok.kind != kind:
            raise ParseError(
                f"expected {what or kind}, found {_describe(tok)}", tok.line, tok.column
            )
        return self.next()


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "EOF" else repr(tok.text)


def parse_formula_tokens(ts: TokenStream) -> Formula:
    """Parse one formula from ``ts``, stopping at the first token that cannot continue it."""
    left = _disjunction(ts)
    if ts.peek.kind == "IMP":
        ts.next()
        return Implies(left, parse_formula_tokens(ts))
    return left


def _disjunction(ts: TokenStream) -> Formula:
    f = _conjunction(ts)
    while ts.peek.kind == "OR":
        ts.next()
        f = Or(f, _conjunction(ts))
    return f


def _conjunction(ts: TokenStream) -> Formula:
    f = _unary(ts)
    while ts.peek.kind == "AND":
        ts.next()
        f = And(f, _unary(ts))
    return f


def _unary(ts: TokenStream) -> Formula:
    tok = ts.next()
    if tok.kind == "NOT":
        return Not(_unary(ts))
    if tok.kind == "LPAREN":
        f = parse_formula_tokens(ts)
        ts.expect("RPAREN", "')'")
        return f
    if tok.kind == "TRUE":
        return TOP
    if tok.kind == "FALSE":
        return BOTTOM
    if tok.kind == "NAME":
        return Atom(tok.text)
    raise ParseError(f"expected a formula, found {_describe(tok)}", tok.line, tok.column)


def parse_formula(text: str, allow_reserved: bool = False) -> Formula:
    """Parse a complete formula.

    >>> parse_formula("b -> !a & !c")
    Implies(left=Atom(name='b'), right=And(left=Not(arg=Atom(name='a')), right=Not(arg=Atom(name='c'))))
    """
    ts = TokenStream(tokenize(text, allow_reserved))
    f = parse_formula_tokens(ts)
    tok = ts.peek
    if tok.kind != "EOF":
        raise ParseError(f"unexpected {_describe(tok)} after formula", tok.line, tok.column)
    return f
