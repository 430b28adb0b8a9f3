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

import random

import pytest

from surreal_calc.errors import ExitStatus, ParseError
from surreal_calc.parser import (
    BinOp,
    Call,
    Cauchy,
    Derive,
    Ftc,
    Integrate,
    Let,
    LimitFn,
    LimitSeq,
    Name,
    Neg,
    Num,
    Options,
    SetOption,
    Sum,
    parse_expr,
    render,
    tokenize,
)

EXPRESSION_START = {"number", "name", "'('", "'-'"}


def test_tokenize():
    kinds = [token.kind for token in tokenize("sum 1/2^i upto On --naive")]
    assert kinds == ["name", "number", "op", "number", "op", "name", "name", "name", "flag", "end"]
    assert tokenize("w ^ 2")[-1].position == 5


def test_precedence_and_associativity():
    assert parse_expr("1 + 2*w") == BinOp("+", Num(1), BinOp("*", Num(2), Name("w")))
    assert parse_expr("2^3^2") == BinOp("^", Num(2), BinOp("^", Num(3), Num(2)))
    assert parse_expr("1 - 2 - 3") == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse_expr("-x^2") == Neg(BinOp("^", Name("x"), Num(2)))
    assert parse_expr("w^-i") == BinOp("^", Name("w"), Neg(Name("i")))


def test_calls():
    assert parse_expr("arctan(w)") == Call("arctan", (Name("w"),))
    assert parse_expr("between(0, 1)") == Call("between", (Num(0), Num(1)))
    assert parse_expr("f()") == Call("f", ())


def test_spans():
    node = parse_expr("1 + 2*w")
    assert node.span == (0, 7)
    assert node.right.span == (4, 7)
    assert node.right.right.span == (6, 7)


@pytest.mark.parametrize(
    "source, node",
    [
        ("let x = 3", Let("x", Num(3))),
        ("set budget_nodes 10", SetOption("budget_nodes", Num(10))),
        ("set format = json", SetOption("format", Name("json"))),
        (
            "sum 1/2^i upto On",
            Sum(BinOp("/", Num(1), BinOp("^", Num(2), Name("i")))),
        ),
        (
            "sum 1/2^i upto On --naive",
            Sum(BinOp("/", Num(1), BinOp("^", Num(2), Name("i"))), naive=True),
        ),
        ("sum i upto w", Sum(Name("i"), Name("w"))),
        (
            "integrate exp(x) from 0 to w",
            Integrate(Call("exp", (Name("x"),)), Num(0), Name("w")),
        ),
        ("limit seq alpha", LimitSeq(Name("alpha"))),
        (
            "limit fn 1/x at 0 from right",
            LimitFn(BinOp("/", Num(1), Name("x")), Num(0), "right"),
        ),
        ("derive x^2 at 3", Derive(BinOp("^", Name("x"), Num(2)), Num(3))),
        ("derive x^2", Derive(BinOp("^", Name("x"), Num(2)))),
        (
            "cauchy series w^-i",
            Cauchy(BinOp("^", Name("w"), Neg(Name("i"))), series=True),
        ),
        ("cauchy series(1)", Cauchy(Num(1), series=True)),
        ("cauchy (1/alpha)", Cauchy(BinOp("/", Num(1), Name("alpha")))),
        ("options nlog -1", Options("nlog", Neg(Num(1)))),
        ("sum(1)", Sum(Num(1))),
        (
            "sum (1/2)^i upto On",
            Sum(BinOp("^", BinOp("/", Num(1), Num(2)), Name("i"))),
        ),
        (
            "integrate (x+1) from 0 to 1",
            Integrate(BinOp("+", Name("x"), Num(1)), Num(0), Num(1)),
        ),
        ("derive (x+1)^2", Derive(BinOp("^", BinOp("+", Name("x"), Num(1)), Num(2)))),
    ],
)
def test_commands(source, node):
    assert parse_expr(source) == node
    assert parse_expr(render(node)) == node


@pytest.mark.parametrize(
    "source, position, expected",
    [
        ("1 +", 3, EXPRESSION_START),
        ("1 + )", 4, EXPRESSION_START),
        ("(1 + 2", 6, {"')'"}),
        ("f(1 2)", 4, {"','", "')'"}),
        ("1 2", 2, {"end of input"}),
        ("limit foo x", 6, {"'seq'", "'fn'"}),
        ("options sin 1", 8, {"'arctan'", "'nlog'"}),
        ("integrate x to 1", 12, {"'from'"}),
        ("let 3 = x", 4, {"name"}),
    ],
)
def test_parse_errors(source, position, expected):
    with pytest.raises(ParseError) as exc_info:
        parse_expr(source)
    assert exc_info.value.position == position
    assert exc_info.value.expected == frozenset(expected)
    assert exc_info.value.exit_status is ExitStatus.PARSE_ERROR


def test_unexpected_character():
    with pytest.raises(ParseError) as exc_info:
        parse_expr("1 $ 2")
    assert exc_info.value.position == 2
    assert "column 3" in str(exc_info.value)


@pytest.mark.parametrize(
    "source, text",
    [
        ("(1 + 2) * 3", "(1 + 2)*3"),
        ("1 - (2 - 3)", "1 - (2 - 3)"),
        ("(2^3)^2", "(2^3)^2"),
        ("(-x)^2", "(-x)^2"),
        ("-(-x)", "- -x"),
        ("a * -b", "a*-b"),
        ("((w))", "w"),
    ],
)
def test_render_uses_minimal_parentheses(source, text):
    assert render(parse_expr(source)) == text


_NAMES = ["x", "y", "w", "alpha", "omega", "foo", "On", "upto"]
_OPERAND_NAMES = ["x", "y", "w", "alpha", "omega", "foo"]
_FUNCTIONS = ["f", "arctan", "exp", "between"]


def _random_node(rng, depth, names=_NAMES):
    choice = rng.randrange(5 if depth else 2)
    if choice == 0:
        return Num(rng.randrange(100))
    if choice == 1:
        return Name(rng.choice(names))
    if choice == 2:
        return Neg(_random_node(rng, depth - 1, names))
    if choice == 3:
        args = tuple(_random_node(rng, depth - 1, names) for _ in range(rng.randrange(3)))
        return Call(rng.choice(_FUNCTIONS), args)
    return BinOp(
        rng.choice("+-*/^"),
        _random_node(rng, depth - 1, names),
        _random_node(rng, depth - 1, names),
    )


def _random_command(rng):
    def operand():
        return _random_node(rng, 3, _OPERAND_NAMES)

    builders = [
        lambda: Let(rng.choice(_OPERAND_NAMES), operand()),
        lambda: SetOption(rng.choice(["budget_nodes", "format"]), operand()),
        lambda: Sum(operand(), rng.choice([None, operand()]), rng.random() < 0.5),
        lambda: Integrate(operand(), operand(), operand()),
        lambda: Ftc(operand(), operand()),
        lambda: LimitSeq(operand()),
        lambda: LimitFn(operand(), operand(), rng.choice(["both", "left", "right"])),
        lambda: Derive(operand(), rng.choice([None, operand()])),
        lambda: Cauchy(operand(), rng.random() < 0.5),
        lambda: Options(rng.choice(["arctan", "nlog"]), operand()),
    ]
    return rng.choice(builders)()


def test_render_round_trips():
    rng = random.Random(2026)
    for _ in range(1000):
        node = _random_node(rng, 4)
        assert parse_expr(render(node)) == node


def test_render_round_trips_commands():
    rng = random.Random(2027)
    for _ in range(1000):
        node = _random_command(rng)
        assert parse_expr(render(node)) == node
