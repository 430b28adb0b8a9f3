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

"""The ``surreal-calc`` command line front end.

A `Session` holds the ``let`` bindings and the `.Settings` of one REPL or
script, and `eval_command` evaluates one command line against it::

    >>> session = Session()
    >>> print(session.execute("arctan(w)"))
    pi/2 - w^-1
    >>> print(session.execute("integrate exp(x) from 0 to w"))
    exp(w) - 1

Expressions without free variables are evaluated as surreal numbers, with
``w`` standing for omega and ``arctan``, ``nlog`` and ``exp`` taking their
genetic definitions.  Expressions in the variables ``alpha``, ``i``, ``n``,
``x``, ``a``, ``b``, ``h`` and ``t`` stay symbolic.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Iterable
from fractions import Fraction
from types import MappingProxyType

import sympy

from ._about import __version__
from .config import DEFAULT_SETTINGS, OUTPUT_FORMATS, Settings
from .errors import DomainError, Error, ExitStatus, UnsupportedClass
from .expr import ALPHA, N, OMEGA, VARIABLES, check_in_class
from .factories import Outcome, json_result_factory, text_result_factory
from .foundations import Ordinal
from .gaps import INFTY, OFF, ON, DedekindSection, SurrealStream
from .limits import classify_cauchy, derivative, fn_limit, seq_limit
from .parser import (
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
)
from .sumint import (
    closed_form_partial_sum,
    ftc_check,
    integrate_extrapolative,
    series_extrapolate,
)
from .surreal import OMEGA as OMEGA_NUMBER
from .surreal import Surreal, birthday, simplest_between, to_genetic
from .transcend import (
    FunctionId,
    evaluation_path,
    option_filter,
    surreal_exp,
    ul_arctan,
    ul_nlog,
)

__all__ = ["Session", "eval_command", "main"]

try:
    from prompt_toolkit import PromptSession
    from prompt_toolkit.history import InMemoryHistory

    PROMPT_TOOLKIT_AVAILABLE = True
except ImportError:
    PROMPT_TOOLKIT_AVAILABLE = False

_LOGGER = logging.getLogger(__name__)

PROMPT = "surreal> "

_RESULT_FACTORIES = {"text": text_result_factory, "json": json_result_factory}

_OMEGA_NAMES = ("w", "omega")
_SECTIONS = {"On": ON, "ON": ON, "Off": OFF, "OFF": OFF, "INFTY": INFTY}
_SYMBOLIC_FUNCTIONS = {
    "exp": sympy.exp,
    "log": sympy.log,
    "arctan": sympy.atan,
    "atan": sympy.atan,
}
_SURREAL_FUNCTIONS = ("arctan", "atan", "nlog", "exp", "log", "birthday", "genetic", "between")
_RESERVED = frozenset(
    set(VARIABLES)
    | set(_SECTIONS)
    | set(_OMEGA_NAMES)
    | set(_SURREAL_FUNCTIONS)
    | {"pi", "e"}
)

# `set` keys and how their values are read.
_SETTINGS_KEYS = {
    "budget_width": Fraction,
    "budget_nodes": int,
    "birthday_bound": int,
    "proof_window": int,
    "riemann_window": int,
    "witness_budget": int,
    "stream_terms": int,
    "option_orders": int,
    "format": str,
}


class _Symbolic(Exception):
    """Raised when a surreal evaluation meets a free variable."""


class Session:
    """The state a sequence of command lines is evaluated against.

    Args:
        settings: The initial configuration.

    Bindings made with ``let`` can't be rebound, and a ``set`` command changes
    the configuration for the commands after it only.
    """

    def __init__(self, settings: Settings = DEFAULT_SETTINGS) -> None:
        self._settings = settings
        self._bindings: dict[str, object] = {}
        self._result_factory = _RESULT_FACTORIES[settings.output_format]

    @property
    def settings(self) -> Settings:
        """The configuration the next command runs with."""
        return self._settings

    @property
    def bindings(self) -> MappingProxyType:
        """A read only view of the ``let`` bindings."""
        return MappingProxyType(self._bindings)

    @property
    def result_factory(self) -> Callable[[Settings], Callable[[Outcome], str]]:
        """Factory used to render results.

        By default results are rendered as text.  This property can be set
        to `.factories.json_result_factory`, or to any factory following the
        same protocol.
        """
        return self._result_factory

    @result_factory.setter
    def result_factory(self, value: Callable[[Settings], Callable[[Outcome], str]]) -> None:
        self._result_factory = value

    def render(self, outcome: Outcome) -> str:
        return self._result_factory(self._settings)(outcome)

    def execute(self, source: str) -> str:
        """Evaluate ``source`` with `eval_command` and render the outcome."""
        return self.render(eval_command(self, source))

    def _bind(self, name: str, value) -> None:
        if name in _RESERVED:
            raise DomainError("%s is a reserved name" % name)
        if name in self._bindings:
            raise DomainError("%s is already bound" % name)
        self._bindings[name] = value

    def _configure(self, key: str, value) -> None:
        if key == "format":
            self._result_factory = _RESULT_FACTORIES[value]
            key = "output_format"
        try:
            self._settings = self._settings.replace(**{key: value})
        except ValueError as exc:
            raise DomainError(str(exc)) from exc


class _Evaluator:
    """Evaluates the expression nodes of one command."""

    def __init__(self, session: Session) -> None:
        self.session = session
        self.settings = session.settings
        self.paths: list[str] = []

    # Symbolic evaluation

    def symbolic(self, node) -> sympy.Expr:
        """Return ``node`` as a closed-form expression."""
        return check_in_class(self._symbolic(node))

    def _symbolic(self, node) -> sympy.Expr:
        if isinstance(node, Num):
            return sympy.Integer(node.value)
        if isinstance(node, Name):
            return self._symbolic_name(node.name)
        if isinstance(node, Neg):
            return -self._symbolic(node.operand)
        if isinstance(node, BinOp):
            left, right = self._symbolic(node.left), self._symbolic(node.right)
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return left * right
            if node.op == "/":
                if right == 0:
                    raise DomainError("division by zero")
                return left / right
            return left**right
        function = _SYMBOLIC_FUNCTIONS.get(node.function)
        if function is None:
            raise UnsupportedClass("%s is not a closed-form function" % node.function)
        if len(node.args) != 1:
            raise DomainError("%s takes one argument" % node.function)
        return function(self._symbolic(node.args[0]))

    def _symbolic_name(self, name: str) -> sympy.Expr:
        if name in _OMEGA_NAMES:
            return OMEGA
        if name == "pi":
            return sympy.pi
        if name == "e":
            return sympy.E
        if name in VARIABLES:
            return VARIABLES[name]
        if name in self.session.bindings:
            value = self.session.bindings[name]
            if isinstance(value, Surreal):
                return value.to_sympy()
            if isinstance(value, sympy.Expr):
                return value
            raise DomainError("%s is bound to %s, not to a number" % (name, value))
        raise DomainError("unknown name %s" % name)

    # Surreal evaluation

    def value(self, node):
        """Return the value of ``node``.

        Nodes without free variables evaluate to numbers, sections, streams
        and the other results of the surreal engines; nodes with free
        variables evaluate to an expression.
        """
        try:
            return self._value(node)
        except _Symbolic:
            return self.symbolic(node)

    def number(self, node) -> Surreal:
        value = self._value(node)
        if not isinstance(value, Surreal):
            raise DomainError("expected a number, not %s" % value)
        return value

    def operand(self, node):
        """Return a number, a section, or an expression for symbolic operands."""
        value = self.value(node)
        if isinstance(value, (Surreal, DedekindSection, sympy.Expr)):
            return value
        raise DomainError("expected a number or a section, not %s" % value)

    def _value(self, node):
        if isinstance(node, Num):
            return Surreal(node.value)
        if isinstance(node, Name):
            return self._name(node.name)
        if isinstance(node, Neg):
            operand = self._value(node.operand)
            if isinstance(operand, (Surreal, DedekindSection)):
                return -operand
            raise DomainError("cannot negate %s" % operand)
        if isinstance(node, BinOp):
            return self._arithmetic(node)
        return self._call(node)

    def _name(self, name: str):
        if name in _OMEGA_NAMES:
            return OMEGA_NUMBER
        if name in _SECTIONS:
            return _SECTIONS[name]
        if name in ("pi", "e"):
            return Surreal.from_sympy(self._symbolic_name(name))
        if name in VARIABLES:
            raise _Symbolic(name)
        if name in self.session.bindings:
            value = self.session.bindings[name]
            if isinstance(value, sympy.Expr):
                raise _Symbolic(name)
            return value
        raise DomainError("unknown name %s" % name)

    def _arithmetic(self, node: BinOp) -> Surreal:
        left, right = self._value(node.left), self._value(node.right)
        if not isinstance(left, Surreal) or not isinstance(right, Surreal):
            raise DomainError("cannot apply %s to %s and %s" % (node.op, left, right))
        self.paths.append("normal-form")
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if node.op == "/":
            if not right:
                raise DomainError("division by zero")
            return left / right
        return self._power(left, right)

    def _power(self, base: Surreal, exponent: Surreal) -> Surreal:
        if base == OMEGA_NUMBER:
            return Surreal.monomial(1, exponent)
        power = exponent.as_fraction()
        if power is not None and power.denominator == 1:
            if not base and power < 0:
                raise DomainError("division by zero")
            return base ** int(power)
        return Surreal.from_sympy(base.to_sympy() ** exponent.to_sympy())

    def _call(self, node: Call):
        name = node.function
        if name not in _SURREAL_FUNCTIONS:
            raise UnsupportedClass("unknown function %s" % name)
        arity = 2 if name == "between" else 1
        if len(node.args) != arity:
            raise DomainError("%s takes %d argument%s" % (name, arity, "s" if arity > 1 else ""))
        args = [self._value(arg) for arg in node.args]
        if name == "between":
            left, right = args
            self.paths.append("simplicity")
            return simplest_between([left], [right])
        (x,) = args
        if not isinstance(x, Surreal):
            raise DomainError("%s is not defined at %s" % (name, x))
        if name in ("arctan", "atan"):
            self.paths.append("arctan:" + evaluation_path(FunctionId.ARCTAN, x))
            return ul_arctan(x, self.settings)
        if name == "nlog":
            self.paths.append("nlog:" + evaluation_path(FunctionId.NLOG, x))
            return ul_nlog(x, self.settings)
        if name == "exp":
            self.paths.append("exp")
            return surreal_exp(x)
        if name == "log":
            if not x.is_real():
                raise UnsupportedClass("log(%s) is outside the supported class" % x)
            self.paths.append("real")
            return Surreal(x.real_value().log())
        if name == "birthday":
            self.paths.append("sign-expansion")
            return birthday(x)
        self.paths.append("genetic-form")
        return to_genetic(x)

    def ordinal(self, node) -> Ordinal:
        bound = self.number(node).as_ordinal()
        if bound is None:
            raise DomainError("the bound %s is not an ordinal" % self.number(node))
        return bound

    @property
    def provenance(self) -> str | None:
        distinct = list(dict.fromkeys(self.paths))
        return ", ".join(distinct) if distinct else None


def _command_name(node) -> str:
    return {
        Let: "let",
        SetOption: "set",
        Sum: "sum",
        Integrate: "integrate",
        Ftc: "ftc",
        LimitSeq: "limit",
        LimitFn: "limit",
        Derive: "derive",
        Cauchy: "cauchy",
        Options: "options",
    }.get(type(node), "eval")


def _setting(evaluator: _Evaluator, node: SetOption):
    key = node.key
    if key == "output_format":
        key = "format"
    kind = _SETTINGS_KEYS.get(key)
    if kind is None:
        raise DomainError("unknown setting %s" % node.key)
    if kind is str:
        if not isinstance(node.value, Name) or node.value.name not in OUTPUT_FORMATS:
            raise DomainError("format must be one of %s" % ", ".join(OUTPUT_FORMATS))
        return key, node.value.name
    value = evaluator.number(node.value).as_fraction()
    if value is None or (kind is int and value.denominator != 1):
        raise DomainError("%s must be %s" % (key, "an integer" if kind is int else "rational"))
    return key, kind(value)


def _dispatch(evaluator: _Evaluator, node):
    session, settings = evaluator.session, evaluator.settings
    if isinstance(node, Let):
        value = evaluator.value(node.value)
        session._bind(node.name, value)
        return value, node.name
    if isinstance(node, SetOption):
        key, value = _setting(evaluator, node)
        session._configure(key, value)
        return value, key
    if isinstance(node, Sum):
        term = evaluator.symbolic(node.term)
        bound = None if node.bound is None else evaluator.ordinal(node.bound)
        evaluator.paths.append("naive-partial-sums" if node.naive else "extrapolation")
        return series_extrapolate(term, bound, node.naive, settings), None
    if isinstance(node, Integrate):
        evaluator.paths.append("riemann-extrapolation")
        integrand = evaluator.symbolic(node.integrand)
        lower, upper = evaluator.operand(node.lower), evaluator.operand(node.upper)
        return integrate_extrapolative(integrand, lower, upper, settings), None
    if isinstance(node, Ftc):
        evaluator.paths.append("riemann-extrapolation")
        integrand = evaluator.symbolic(node.integrand)
        return ftc_check(integrand, evaluator.operand(node.lower), settings=settings), None
    if isinstance(node, LimitSeq):
        result = seq_limit(evaluator.symbolic(node.sequence))
        evaluator.paths.append(result.provenance)
        return result, None
    if isinstance(node, LimitFn):
        point = evaluator.operand(node.point)
        result = fn_limit(evaluator.symbolic(node.function), point, node.side)
        evaluator.paths.append(result.provenance)
        return result, None
    if isinstance(node, Derive):
        evaluator.paths.append("difference-quotient")
        point = None if node.point is None else evaluator.number(node.point)
        return derivative(evaluator.symbolic(node.function), point), None
    if isinstance(node, Cauchy):
        sequence = evaluator.symbolic(node.sequence)
        if node.series and sequence.has(OMEGA):
            sequence = SurrealStream.from_term(sequence)
        elif node.series:
            # Real terms are classified through their partial sums in alpha.
            partial = closed_form_partial_sum(sequence, settings).partial_sum
            sequence = partial.subs(N, ALPHA)
        evaluator.paths.append("cauchy")
        return classify_cauchy(sequence), None
    if isinstance(node, Options):
        x = evaluator.number(node.argument)
        evaluator.paths.append("option-filter")
        return option_filter(to_genetic(x), node.function, x, settings), None
    return evaluator.value(node), None


def eval_command(session: Session, source: str) -> Outcome:
    """Evaluate one command line against ``session``.

    ``let`` and ``set`` commands update the session.  Errors raised by the
    engines are caught and returned in the `.factories.Outcome`, so a script
    can carry on after a failing line.
    """
    command = "eval"
    evaluator = _Evaluator(session)
    try:
        node = parse_expr(source)
        command = _command_name(node)
        value, label = _dispatch(evaluator, node)
    except ZeroDivisionError as exc:
        error = DomainError(str(exc) or "division by zero")
        return Outcome(command, source, provenance=evaluator.provenance, error=error)
    except Error as exc:
        _LOGGER.debug("%s failed: %s", source, exc)
        return Outcome(command, source, provenance=evaluator.provenance, error=exc)
    _LOGGER.debug("%s evaluated by %s", source, evaluator.provenance)
    return Outcome(command, source, value, evaluator.provenance, label)


def _exit_status(outcome: Outcome) -> int:
    return ExitStatus.OK if outcome.error is None else outcome.error.exit_status


def _emit(session: Session, outcome: Outcome) -> None:
    stream = sys.stdout if outcome.error is None else sys.stderr
    print(session.render(outcome), file=stream)


def _script_lines(lines: Iterable[str]) -> Iterable[str]:
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            yield line


def run_script(session: Session, lines: Iterable[str]) -> int:
    """Evaluate each command line, returning the status of the first failure."""
    status = ExitStatus.OK
    for line in _script_lines(lines):
        outcome = eval_command(session, line)
        _emit(session, outcome)
        if status == ExitStatus.OK:
            status = _exit_status(outcome)
    return int(status)


def _read_line(prompt_session) -> str:
    if prompt_session is not None:
        return prompt_session.prompt(PROMPT)
    return input(PROMPT)


def repl(session: Session) -> int:
    """Read and evaluate command lines until end of input or ``quit``."""
    prompt_session = None
    if PROMPT_TOOLKIT_AVAILABLE and sys.stdin.isatty():
        prompt_session = PromptSession(history=InMemoryHistory())
    while True:
        try:
            line = _read_line(prompt_session)
        except KeyboardInterrupt:
            print("^C")
            continue
        except EOFError:
            break
        line = line.split("#", 1)[0].strip()
        if line in ("quit", "exit"):
            break
        if line:
            _emit(session, eval_command(session, line))
    return int(ExitStatus.OK)


def _budget_width(text: str) -> Fraction:
    outcome = eval_command(Session(), text)
    width = None
    if outcome.error is None and isinstance(outcome.value, Surreal):
        width = outcome.value.as_fraction()
    if width is None or width <= 0:
        raise argparse.ArgumentTypeError("invalid budget width %r" % text)
    return width


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surreal-calc",
        description="Exact calculus on the surreal numbers.",
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log engine decisions")
    parser.add_argument("--budget-width", type=_budget_width, metavar="WIDTH")
    parser.add_argument("--budget-nodes", type=int, metavar="N")
    parser.add_argument("--birthday-bound", type=int, metavar="N")
    parser.add_argument("--proof-window", type=int, metavar="N")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, dest="output_format")
    commands = parser.add_subparsers(dest="mode", required=True)
    run = commands.add_parser("run", help="evaluate a script, one command per line")
    run.add_argument("file")
    commands.add_parser("repl", help="start an interactive session")
    evaluate = commands.add_parser("eval", help="evaluate one command")
    evaluate.add_argument("command", nargs="+")
    return parser


def _settings(args: argparse.Namespace) -> Settings:
    changes = {
        name: getattr(args, name)
        for name in (
            "budget_width",
            "budget_nodes",
            "birthday_bound",
            "proof_window",
            "output_format",
        )
        if getattr(args, name) is not None
    }
    return DEFAULT_SETTINGS.replace(**changes)


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(name)s: %(message)s")
    try:
        session = Session(_settings(args))
    except ValueError as exc:
        parser.error(str(exc))
    if args.mode == "eval":
        outcome = eval_command(session, " ".join(args.command))
        _emit(session, outcome)
        return int(_exit_status(outcome))
    if args.mode == "run":
        try:
            with open(args.file, encoding="utf-8") as script:
                return run_script(session, script)
        except OSError as exc:
            print("surreal-calc: %s" % exc, file=sys.stderr)
            return int(ExitStatus.DOMAIN_ERROR)
    return repl(session)
