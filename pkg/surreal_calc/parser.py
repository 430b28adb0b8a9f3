# Copyright 2026 The surreal-calc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Tokenizer, Pratt parser and renderer for the calculator language.

Expressions follow::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' factor)?
    atom   := integer | name | name '(' args ')' | '(' expr ')'

A command line is either an expression or one of the commands below, and
`parse_expr` returns the matching node::

    let <name> = <expr>
    set <key> <value>
    sum <term> [upto <expr> | upto On] [--naive]
    integrate <expr> from <a> to <b>
    ftc <expr> from <a>
    limit seq <expr>
    limit fn <expr> at <point> [from left | from right]
    derive <expr> [at <point>]
    cauchy [series] <expr>
    options arctan|nlog <expr>

Every node records the span of source text it was parsed from.  Spans never
take part in equality, so ``parse_expr(render(node)) == node`` holds for any
expression node.
"""

from __future__ import annotations

import dataclasses
import re
from typing import NamedTuple, Union

from .errors import ParseError

__all__ = [
    "Token",
    "tokenize",
    "Num",
    "Name",
    "Neg",
    "BinOp",
    "Call",
    "Let",
    "SetOption",
    "Sum",
    "Integrate",
    "Ftc",
    "LimitSeq",
    "LimitFn",
    "Derive",
    "Cauchy",
    "Options",
    "Node",
    "Command",
    "parse_expr",
    "render",
]


def _span():
    return dataclasses.field(default=(0, 0), compare=False, repr=False)


# Left binding powers of the infix operators; '^' is right associative.
INFIX_BP = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}
PREFIX_BP = {"-": 25}
_RIGHT_ASSOCIATIVE = {"^"}

_TOKEN_RE = re.compile(
    r"""
    (?P<space>\s+)
    | (?P<number>\d+)
    | (?P<flag>--[A-Za-z][A-Za-z-]*)
    | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<op>[-+*/^(),=])
    """,
    re.VERBOSE,
)

COMMANDS = frozenset(
    ["let", "set", "sum", "integrate", "ftc", "limit", "derive", "cauchy", "options"]
)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(source: str) -> list[Token]:
    """Split ``source`` into tokens, ending with an ``end`` token.

    Raises:
        ParseError: ``source`` contains a character outside the language.
    """
    tokens = []
    position = 0
    while position < len(source):
        match = _TOKEN_RE.match(source, position)
        if match is None:
            raise ParseError("unexpected character %r" % source[position], position)
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(source)))
    return tokens


# Expression nodes


@dataclasses.dataclass(frozen=True)
class Num:
    value: int
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class Name:
    name: str
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class Neg:
    operand: Node
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class BinOp:
    op: str
    left: Node
    right: Node
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class Call:
    function: str
    args: tuple[Node, ...]
    span: tuple[int, int] = _span()


Node = Union[Num, Name, Neg, BinOp, Call]


# Command nodes


@dataclasses.dataclass(frozen=True)
class Let:
    name: str
    value: Node
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class SetOption:
    key: str
    value: Node
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class Sum:
    """``sum term upto bound``; ``bound`` is ``None`` for On."""

    term: Node
    bound: Node | None = None
    naive: bool = False
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class Integrate:
    integrand: Node
    lower: Node
    upper: Node
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class Ftc:
    integrand: Node
    lower: Node
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class LimitSeq:
    sequence: Node
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class LimitFn:
    function: Node
    point: Node
    side: str = "both"
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class Derive:
    function: Node
    point: Node | None = None
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class Cauchy:
    """``cauchy expr``, or ``cauchy series term`` for the partial sums of a series."""

    sequence: Node
    series: bool = False
    span: tuple[int, int] = _span()


@dataclasses.dataclass(frozen=True)
class Options:
    function: str
    argument: Node
    span: tuple[int, int] = _span()


Command = Union[
    Let, SetOption, Sum, Integrate, Ftc, LimitSeq, LimitFn, Derive, Cauchy, Options
]


class Parser:
    """A Pratt parser over the token list of one command line."""

    def __init__(self, source: str) -> None:
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0

    def _current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != "end":
            self.pos += 1
        return token

    def _end_of_previous(self) -> int:
        previous = self.tokens[self.pos - 1]
        return previous.position + len(previous.text)

    def _error(self, message: str, expected) -> ParseError:
        token = self._current()
        found = "end of input" if token.kind == "end" else repr(token.text)
        return ParseError("%s, found %s" % (message, found), token.position, expected)

    def _expect(self, kind: str, text: str | None = None) -> Token:
        token = self._current()
        if token.kind != kind or (text is not None and token.text != text):
            wanted = repr(text) if text is not None else kind
            raise self._error("expected %s" % wanted, {wanted})
        return self._advance()

    def _accept(self, kind: str, text: str) -> bool:
        token = self._current()
        if token.kind == kind and token.text == text:
            self._advance()
            return True
        return False

    def parse(self) -> Node | Command:
        token = self._current()
        if token.kind == "name" and token.text in COMMANDS:
            node = self._parse_command()
        else:
            node = self.parse_expression()
        if self._current().kind != "end":
            raise self._error("unexpected trailing input", {"end of input"})
        return node

    # Expressions

    def parse_expression(self, rbp: int = 0) -> Node:
        start = self._current().position
        left = self.nud(self._advance())
        while True:
            token = self._current()
            if token.kind != "op" or token.text not in INFIX_BP:
                break
            lbp = INFIX_BP[token.text]
            if lbp <= rbp:
                break
            self._advance()
            next_rbp = lbp - 1 if token.text in _RIGHT_ASSOCIATIVE else lbp
            right = self.parse_expression(next_rbp)
            left = BinOp(token.text, left, right, (start, self._end_of_previous()))
        return left

    def nud(self, token: Token) -> Node:
        span = (token.position, token.position + len(token.text))
        if token.kind == "number":
            return Num(int(token.text), span)
        if token.kind == "name":
            if self._accept("op", "("):
                args = self._parse_argument_list()
                return Call(token.text, args, (token.position, self._end_of_previous()))
            return Name(token.text, span)
        if token.kind == "op" and token.text in PREFIX_BP:
            operand = self.parse_expression(PREFIX_BP[token.text])
            return Neg(operand, (token.position, self._end_of_previous()))
        if token.kind == "op" and token.text == "(":
            inner = self.parse_expression()
            self._expect("op", ")")
            return inner
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ParseError(
            "expected an expression, found %s" % found,
            token.position,
            {"number", "name", "'('", "'-'"},
        )

    def _parse_argument_list(self) -> tuple[Node, ...]:
        args = []
        if self._accept("op", ")"):
            return ()
        while True:
            args.append(self.parse_expression())
            if self._accept("op", ")"):
                return tuple(args)
            if not self._accept("op", ","):
                raise self._error("expected ',' or ')'", {"','", "')'"})

    # Commands

    def _parse_command(self) -> Command:
        keyword = self._advance()
        start = keyword.position
        node = getattr(self, "_parse_" + keyword.text)()
        return dataclasses.replace(node, span=(start, self._end_of_previous()))

    def _parse_let(self) -> Let:
        name = self._expect("name").text
        self._expect("op", "=")
        return Let(name, self.parse_expression())

    def _parse_set(self) -> SetOption:
        key = self._expect("name").text
        self._accept("op", "=")
        return SetOption(key, self.parse_expression())

    def _parse_sum(self) -> Sum:
        term = self.parse_expression()
        bound = None
        if self._accept("name", "upto"):
            token = self._current()
            if token.kind == "name" and token.text in ("On", "ON"):
                self._advance()
            else:
                bound = self.parse_expression()
        naive = self._accept("flag", "--naive")
        if self._current().kind != "end":
            raise self._error("unexpected trailing input", {"'upto'", "'--naive'"})
        return Sum(term, bound, naive)

    def _parse_integrate(self) -> Integrate:
        integrand = self.parse_expression()
        self._expect("name", "from")
        lower = self.parse_expression()
        self._expect("name", "to")
        return Integrate(integrand, lower, self.parse_expression())

    def _parse_ftc(self) -> Ftc:
        integrand = self.parse_expression()
        self._expect("name", "from")
        return Ftc(integrand, self.parse_expression())

    def _parse_limit(self) -> LimitSeq | LimitFn:
        if self._accept("name", "seq"):
            return LimitSeq(self.parse_expression())
        if not self._accept("name", "fn"):
            raise self._error("expected 'seq' or 'fn'", {"'seq'", "'fn'"})
        function = self.parse_expression()
        self._expect("name", "at")
        point = self.parse_expression()
        side = "both"
        if self._accept("name", "from"):
            token = self._current()
            if token.kind != "name" or token.text not in ("left", "right"):
                raise self._error("expected 'left' or 'right'", {"'left'", "'right'"})
            side = self._advance().text
        return LimitFn(function, point, side)

    def _parse_derive(self) -> Derive:
        function = self.parse_expression()
        point = self.parse_expression() if self._accept("name", "at") else None
        return Derive(function, point)

    def _parse_cauchy(self) -> Cauchy:
        series = self._accept("name", "series")
        return Cauchy(self.parse_expression(), series)

    def _parse_options(self) -> Options:
        token = self._current()
        if token.kind != "name" or token.text not in ("arctan", "nlog"):
            raise self._error("expected 'arctan' or 'nlog'", {"'arctan'", "'nlog'"})
        self._advance()
        return Options(token.text, self.parse_expression())


def parse_expr(text: str) -> Node | Command:
    """Parse one command line.

    Returns:
        An expression node, or a command node for lines that start with a
        command keyword.

    Raises:
        ParseError: ``text`` is not a command line.  The error carries the
            offending column and the set of tokens that were expected.

    Example:
        >>> parse_expr("1 + 2*w")
        BinOp(op='+', left=Num(value=1), right=BinOp(op='*', left=Num(value=2), right=Name(name='w')))
    """
    return Parser(text).parse()


def _binding_power(node: Node) -> int:
    if isinstance(node, BinOp):
        return INFIX_BP[node.op]
    if isinstance(node, Neg):
        return PREFIX_BP["-"]
    return 100


def _render(node: Node, min_bp: int = 0) -> str:
    if isinstance(node, Num):
        text = str(node.value)
    elif isinstance(node, Name):
        text = node.name
    elif isinstance(node, Call):
        text = "%s(%s)" % (node.function, ", ".join(_render(arg) for arg in node.args))
    elif isinstance(node, Neg):
        inner = _render(node.operand, PREFIX_BP["-"])
        # "--" would read as a flag.
        text = "- " + inner if inner.startswith("-") else "-" + inner
    else:
        bp = INFIX_BP[node.op]
        if node.op in _RIGHT_ASSOCIATIVE:
            left, right = _render(node.left, bp + 1), _render(node.right, bp)
        else:
            left, right = _render(node.left, bp), _render(node.right, bp + 1)
        separator = " %s " % node.op if node.op in "+-" else node.op
        text = left + separator + right
    if _binding_power(node) < min_bp:
        return "(%s)" % text
    return text


def render(node: Node | Command) -> str:
    """Return source text for ``node`` with as few parentheses as possible."""
    if isinstance(node, Let):
        return "let %s = %s" % (node.name, _render(node.value))
    if isinstance(node, SetOption):
        return "set %s %s" % (node.key, _render(node.value))
    if isinstance(node, Sum):
        text = "sum %s upto %s" % (
            _render(node.term),
            "On" if node.bound is None else _render(node.bound),
        )
        return text + " --naive" if node.naive else text
    if isinstance(node, Integrate):
        return "integrate %s from %s to %s" % tuple(
            map(_render, (node.integrand, node.lower, node.upper))
        )
    if isinstance(node, Ftc):
        return "ftc %s from %s" % (_render(node.integrand), _render(node.lower))
    if isinstance(node, LimitSeq):
        return "limit seq %s" % _render(node.sequence)
    if isinstance(node, LimitFn):
        text = "limit fn %s at %s" % (_render(node.function), _render(node.point))
        return text if node.side == "both" else "%s from %s" % (text, node.side)
    if isinstance(node, Derive):
        text = "derive %s" % _render(node.function)
        return text if node.point is None else "%s at %s" % (text, _render(node.point))
    if isinstance(node, Cauchy):
        return "cauchy %s%s" % ("series " if node.series else "", _render(node.sequence))
    if isinstance(node, Options):
        return "options %s %s" % (node.function, _render(node.argument))
    return _render(node)
