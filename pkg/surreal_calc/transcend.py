# Copyright 2026 The surreal-calc Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Genetic arctangent and negated logarithm, and a restricted exponential.

``ul_arctan`` and ``ul_nlog`` (``nlog(x) = -log(1 - x)``) are defined on a
form ``{L | R}`` by options of the shape ``f(y) +- [q]_k``, where ``y`` is an
option of ``x``, ``q`` a quotient of ``x`` and ``y`` and ``[q]_k`` the
``k``-th Maclaurin truncation.  Options whose quotients or values leave the
convergence region are dropped; `option_filter` reports which and why.

Evaluation takes one of four paths, reported by `evaluation_path`:

``real``
    Rational and closed-form real arguments, where the genetic functions
    agree with the real ones.
``monomial-stream``
    Infinitesimal monomials ``r*w^-y``, whose value is the Maclaurin series
    itself, returned as a `.SurrealStream`.
``family``
    Limit ordinals with real cofinal families such as ``w``, evaluated from
    the standard parts of the options.
``symmetry``
    Negative ordinals, through the odd symmetry of the arctangent.
"""

from __future__ import annotations

import enum
import logging
from collections.abc import Iterator
from fractions import Fraction
from typing import NamedTuple, Union

import sympy

from .config import DEFAULT_SETTINGS, Settings
from .errors import DomainError, UnsupportedClass
from .expr import I, OMEGA
from .foundations import PI, ExactReal, Ordinal
from .gaps import SurrealStream
from .surreal import ONE, ZERO, GeneticForm, Surreal, simplest_between, to_genetic

__all__ = [
    "FunctionId",
    "Truncation",
    "OptionRecord",
    "OptionFilterReport",
    "maclaurin_trunc",
    "option_filter",
    "ul_arctan",
    "ul_nlog",
    "surreal_exp",
    "evaluation_path",
]

_LOGGER = logging.getLogger(__name__)

_QUOTIENT_ORDER = 6
_FAMILY_MEMBERS = 4
_MAX_REREPRESENTATIONS = 16

_K = sympy.Symbol("k", positive=True)

Value = Union[Surreal, SurrealStream]


class FunctionId(enum.Enum):
    ARCTAN = "arctan"
    NLOG = "nlog"


def _maclaurin_coefficient(function_id: FunctionId, k: int) -> Fraction:
    if k == 0:
        return Fraction(0)
    if function_id is FunctionId.NLOG:
        return Fraction(1, k)
    if k % 2 == 0:
        return Fraction(0)
    return Fraction(-1 if k % 4 == 3 else 1, k)


def maclaurin_trunc(function_id: FunctionId | str, z, n: int):
    """Return ``[z]_n``, the degree ``n`` Maclaurin truncation at ``z``.

    ``z`` may be a `fractions.Fraction`, an `.ExactReal` or a `.Surreal`;
    the result has the same type.

    Raises:
        UnsupportedClass: ``z`` carries exponential atoms whose powers would
            multiply.

    Example:
        >>> maclaurin_trunc("arctan", Fraction(1, 2), 3)
        Fraction(11, 24)
    """
    function_id = FunctionId(function_id)
    if n < 0:
        raise ValueError("truncation order must be non-negative")
    total = z * 0
    power = z * 0 + 1
    for k in range(1, n + 1):
        power = power * z
        coefficient = _maclaurin_coefficient(function_id, k)
        if coefficient:
            total = total + coefficient * power
    return total


class Truncation(NamedTuple):
    """A Maclaurin truncation ``[argument]_order`` of a named function."""

    function_id: FunctionId
    argument: Surreal | ExactReal
    order: int

    def value(self):
        return maclaurin_trunc(self.function_id, self.argument, self.order)

    def polynomial(self, variable: sympy.Symbol = _K) -> sympy.Expr:
        """Return the truncation as a polynomial in ``variable``."""
        return sum(
            (
                sympy.Rational(c.numerator, c.denominator) * variable**k
                for k in range(self.order + 1)
                for c in [_maclaurin_coefficient(self.function_id, k)]
                if c
            ),
            sympy.S.Zero,
        )


Truncation.function_id.__doc__ = "Either arctan or nlog."
Truncation.argument.__doc__ = "The point at which the truncation is evaluated."
Truncation.order.__doc__ = "The degree ``n`` of ``[x]_n``."


class OptionRecord(NamedTuple):
    """One option of a genetic function's formula.

    ``anchor`` is the option ``y`` of the argument the formula option is built
    from, or ``None`` for the constant options ``-pi/2`` and ``pi/2``.
    """

    side: str
    anchor: Surreal | None
    order: int
    formula: str
    value: Surreal | None

    def __str__(self) -> str:
        if self.value is None:
            return self.formula
        return "%s = %s" % (self.formula, self.value)


class OptionFilterReport(NamedTuple):
    """The result of `option_filter`.

    Attributes:
        kept_left: Left options of the function's formula that survive.
        kept_right: Right options of the function's formula that survive.
        removed: ``(option, condition)`` pairs; each condition is one of
            ``quotient-exceeds-one``, ``left-anchor-beyond-pi/2``,
            ``right-anchor-beyond-pi/2``, ``shifted-quotient-at-least-one``
            and ``scaled-quotient-at-least-one``.
        form: The representation of the argument the options were built from.
        rerepresented: Whether ``form`` replaced the argument's canonical form
            because the canonical one lost every option on a side.
    """

    kept_left: list[OptionRecord]
    kept_right: list[OptionRecord]
    removed: list[tuple[OptionRecord, str]]
    form: GeneticForm
    rerepresented: bool = False

    def render(self) -> str:
        lines = ["form %s%s" % (self.form, " (re-represented)" if self.rerepresented else "")]
        lines += ["  left  %s" % (option,) for option in self.kept_left]
        lines += ["  right %s" % (option,) for option in self.kept_right]
        lines += ["  removed %s [%s]" % (option, tag) for option, tag in self.removed]
        return "\n".join(lines)


def _quotient(numerator: Surreal, denominator: Surreal) -> Surreal:
    if not denominator:
        raise ZeroDivisionError("zero denominator")
    if len(denominator.terms) == 1:
        return numerator / denominator
    return numerator.truncated_div(denominator, _QUOTIENT_ORDER)


def _abs(x: Surreal) -> Surreal:
    return -x if x.sign() < 0 else x


def _anchors(form: GeneticForm) -> tuple[list[Surreal], list[Surreal]]:
    return (
        form.left_options(_FAMILY_MEMBERS),
        form.right_options(_FAMILY_MEMBERS),
    )


def _exact(value: Value) -> Surreal:
    if isinstance(value, SurrealStream):
        raise UnsupportedClass("an option anchored at a transfinite series")
    return value


def _tagged(lefts: list[Surreal], rights: list[Surreal]) -> list[tuple[Surreal, bool]]:
    return [(y, True) for y in lefts] + [(y, False) for y in rights]


def _arctan_options(
    x: Surreal, form: GeneticForm, settings: Settings
) -> Iterator[tuple[OptionRecord, str | None]]:
    half_pi = Surreal(PI / 2)
    yield OptionRecord("left", None, 0, "-pi/2", -half_pi), None
    yield OptionRecord("right", None, 0, "pi/2", half_pi), None
    for anchor, is_left in _tagged(*_anchors(form)):
        name = "arctan(%s)" % anchor
        try:
            quotient = _quotient(x - anchor, ONE + x * anchor)
        except ZeroDivisionError:
            quotient = None
        if quotient is None or _abs(quotient) > ONE:
            yield OptionRecord("both", anchor, 0, "%s +- [q]_n" % name, None), "quotient-exceeds-one"
            continue
        anchor_value = _exact(ul_arctan(anchor, settings))
        tag = "left-anchor-beyond-pi/2" if is_left else "right-anchor-beyond-pi/2"
        for n in range(1, settings.option_orders + 1):
            # A left anchor approaches from below with [q]_{4n-1}; a right
            # anchor swaps the two orders.
            low, high = (4 * n - 1, 4 * n + 1) if is_left else (4 * n + 1, 4 * n - 1)
            below = anchor_value + maclaurin_trunc(FunctionId.ARCTAN, quotient, low)
            above = anchor_value - maclaurin_trunc(FunctionId.ARCTAN, -quotient, high)
            for record in (
                OptionRecord("left", anchor, n, "%s + [q]_%d" % (name, low), below),
                OptionRecord("right", anchor, n, "%s - [-q]_%d" % (name, high), above),
            ):
                yield record, (tag if _abs(record.value) > half_pi else None)


def _nlog_options(
    x: Surreal, form: GeneticForm, settings: Settings
) -> Iterator[tuple[OptionRecord, str | None]]:
    lefts, rights = _anchors(form)
    for anchor, is_left in _tagged(lefts, rights):
        shifted = _quotient(x - anchor, ONE - anchor)
        scaled = _quotient(anchor - x, ONE - x)
        condition = None
        if _abs(shifted) >= ONE:
            condition = "shifted-quotient-at-least-one"
        elif _abs(scaled) >= ONE:
            condition = "scaled-quotient-at-least-one"
        name = "nlog(%s)" % anchor
        anchor_value = None if condition else _exact(ul_nlog(anchor, settings))
        for n in range(1, settings.option_orders + 1):
            low, high = (n, 2 * n + 1) if is_left else (2 * n + 1, n)
            if condition:
                yield OptionRecord("left", anchor, n, "%s + [q]_%d" % (name, low), None), condition
                yield OptionRecord("right", anchor, n, "%s - [p]_%d" % (name, high), None), condition
                continue
            below = anchor_value + maclaurin_trunc(FunctionId.NLOG, shifted, low)
            above = anchor_value - maclaurin_trunc(FunctionId.NLOG, scaled, high)
            yield OptionRecord("left", anchor, n, "%s + [q]_%d" % (name, low), below), None
            yield OptionRecord("right", anchor, n, "%s - [p]_%d" % (name, high), above), None


def option_filter(
    form: GeneticForm,
    function_id: FunctionId | str,
    value: Surreal | None = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> OptionFilterReport:
    """Build the options of ``f({L | R})`` and apply the elimination rules.

    For ``arctan`` an anchor ``y`` is dropped when ``|(x - y)/(1 + x*y)| > 1``,
    and a single option is dropped when its value lies beyond ``pi/2`` in
    absolute value.  For ``nlog`` an anchor is dropped when
    ``|(x - y)/(1 - y)| >= 1`` or ``|(x - y)/(1 - x)| >= 1``.  Truncation
    orders ``n = 1 .. settings.option_orders`` are listed, family members are
    sampled, and quotients by multi-term values are truncated.

    When the rules empty a side of the argument's own options, the argument
    is re-represented as ``{x - 2^-k | x + 2^-k}`` for the first ``k`` that
    keeps both sides, and the report says so.

    Raises:
        InconclusiveComparison: An elimination inequality couldn't be decided.
    """
    function_id = FunctionId(function_id)
    x = form.value() if value is None else Surreal.coerce(value)
    report = _filter(x, form, function_id, settings)
    if function_id is FunctionId.NLOG and _lost_a_side(report, form):
        for k in range(1, _MAX_REREPRESENTATIONS + 1):
            step = Fraction(1, 2**k)
            if x + step > ZERO:
                continue
            candidate = GeneticForm(frozenset({x - step}), frozenset({x + step}))
            report = _filter(x, candidate, function_id, settings)
            if not _lost_a_side(report, candidate):
                _LOGGER.debug("re-represented %s as %s", x, candidate)
                return report._replace(rerepresented=True)
        raise UnsupportedClass("no representation of %s keeps its options" % x)
    return report


def _filter(
    x: Surreal, form: GeneticForm, function_id: FunctionId, settings: Settings
) -> OptionFilterReport:
    options = _arctan_options if function_id is FunctionId.ARCTAN else _nlog_options
    kept_left, kept_right, removed = [], [], []
    for record, condition in options(x, form, settings):
        if condition is not None:
            _LOGGER.debug("dropping %s: %s", record.formula, condition)
            removed.append((record, condition))
        elif record.side == "left":
            kept_left.append(record)
        else:
            kept_right.append(record)
    return OptionFilterReport(kept_left, kept_right, removed, form)


def _lost_a_side(report: OptionFilterReport, form: GeneticForm) -> bool:
    anchored_left = [r for r in report.kept_left if r.anchor is not None]
    anchored_right = [r for r in report.kept_right if r.anchor is not None]
    had_options = bool(form.left or form.right or form.left_family or form.right_family)
    return had_options and (not anchored_left or not anchored_right)


def evaluation_path(function_id: FunctionId | str, x) -> str:
    """Return the name of the path that evaluates ``f(x)``.

    Raises:
        UnsupportedClass: No path handles ``x``.
    """
    function_id = FunctionId(function_id)
    x = Surreal.coerce(x)
    if x.is_real():
        return "real"
    if _monomial_class(x) is not None:
        return "monomial-stream"
    if function_id is FunctionId.ARCTAN:
        if _real_family_ordinal(x) is not None:
            return "family"
        if _real_family_ordinal(-x) is not None:
            return "symmetry"
    raise UnsupportedClass("%s(%s) is outside the supported class" % (function_id.value, x))


def _monomial_class(x: Surreal) -> tuple[ExactReal, Surreal] | None:
    # r * w^-y with y > 0: canonical forms have 0 as their only left or
    # right option.
    if len(x.terms) != 1:
        return None
    coeff, exponent, atom = x.terms[0]
    if atom or exponent.sign() >= 0:
        return None
    return coeff, -exponent


def _real_family_ordinal(x: Surreal) -> Ordinal | None:
    ordinal = x.as_ordinal()
    if ordinal is None or not ordinal.is_limit():
        return None
    if not ordinal.cofinal(1).is_finite():
        return None
    return ordinal


def ul_arctan(x, settings: Settings = DEFAULT_SETTINGS) -> Value:
    """Return the genetic arctangent of ``x``.

    Real arguments give the real arctangent.  ``r*w^-y`` gives the stream
    ``sum_i (-1)^i r^(2i+1) w^(-y(2i+1)) / (2i+1)``.  ``w`` gives
    ``pi/2 - w^-1`` and ``-w`` its negative.

    Raises:
        UnsupportedClass: ``x`` is outside those classes.
        InconclusiveComparison: An option couldn't be compared to ``pi/2``.

    Example:
        >>> print(ul_arctan(OMEGA))
        pi/2 - w^-1
    """
    x = Surreal.coerce(x)
    path = evaluation_path(FunctionId.ARCTAN, x)
    _LOGGER.debug("arctan(%s) by the %s path", x, path)
    if path == "real":
        return Surreal(x.real_value().atan())
    if path == "monomial-stream":
        coeff, depth = _monomial_class(x)
        return SurrealStream(
            (-1) ** I * coeff.expr ** (2 * I + 1) / (2 * I + 1),
            -depth.to_sympy() * (2 * I + 1),
            bound=Ordinal.omega(),
        )
    if path == "symmetry":
        return -ul_arctan(-x, settings)
    return _arctan_from_family(x, settings)


def _arctan_from_family(x: Surreal, settings: Settings) -> Surreal:
    """Evaluate at a limit ordinal from the standard parts of its options.

    The left options ``arctan(k) + [q]_{4n-1}`` have standard parts
    ``arctan(k) + [st q]_{4n-1}``; their supremum, taken over the cofinal
    family, is compared with the surviving right options.
    """
    form = to_genetic(x)
    report = option_filter(form, FunctionId.ARCTAN, x, settings)
    quotient = sympy.limit((x.to_sympy() - _K) / (1 + x.to_sympy() * _K), OMEGA, sympy.oo)
    suprema = set()
    for n in range(1, settings.option_orders + 1):
        standard = sympy.atan(_K) + Truncation(FunctionId.ARCTAN, None, 4 * n - 1).polynomial(_K).subs(_K, quotient)
        suprema.add(ExactReal(sympy.limit(standard, _K, sympy.oo)))
    if len(suprema) != 1:
        raise UnsupportedClass("the left options of arctan(%s) have no common supremum" % x)
    supremum = Surreal(suprema.pop())
    anchored = [r for r in report.kept_left if r.anchor is not None]
    if not anchored or any(not r.value < supremum for r in anchored):
        raise UnsupportedClass("the left options of arctan(%s) reach their supremum" % x)
    right = min(r.value for r in report.kept_right)
    if right == supremum:
        return supremum - Surreal.monomial(1, -1)
    return simplest_between([supremum], [right])


def ul_nlog(x, settings: Settings = DEFAULT_SETTINGS) -> Value:
    """Return the genetic ``nlog(x) = -log(1 - x)`` for ``x <= 0``.

    Real arguments give the real value.  ``-r*w^-y`` gives the stream
    ``sum_{i>=1} (-r)^i w^(-y*i) / i``.

    Raises:
        DomainError: ``x`` is positive.
        UnsupportedClass: ``x`` is outside those classes.
    """
    x = Surreal.coerce(x)
    if x.sign() > 0:
        raise DomainError("nlog is only defined for non-positive arguments, not %s" % x)
    path = evaluation_path(FunctionId.NLOG, x)
    _LOGGER.debug("nlog(%s) by the %s path", x, path)
    if path == "real":
        return Surreal(-(1 - x.real_value()).log())
    coeff, depth = _monomial_class(x)
    return SurrealStream(
        coeff.expr**I / I,
        -depth.to_sympy() * I,
        bound=Ordinal.omega(),
        start=1,
    )


def surreal_exp(x) -> Value:
    """Return ``exp(x)`` for ``x = p + r + e``.

    ``p`` is the purely infinite part, ``r`` the real part and ``e`` the
    infinitesimal part.  The result is ``e^r * exp(p)``, with ``exp(p)`` an
    exponential atom; a monomial ``e`` contributes the stream
    ``e^r * sum_i e^i / i!`` when ``p`` is zero.

    Raises:
        UnsupportedClass: ``x`` carries exponential atoms, or ``e`` is not a
            monomial, or both ``p`` and ``e`` are nonzero.
    """
    x = Surreal.coerce(x)
    if x.has_atoms():
        raise UnsupportedClass("exp of the exponential atom %s" % x)
    infinite = x.infinite_part()
    infinitesimal = x.infinitesimal_part()
    real = x - infinite - infinitesimal
    scale = real.real_value().exp()
    if not infinitesimal:
        return Surreal.monomial(scale, 0, infinite)
    if infinite or len(infinitesimal.terms) > 1:
        raise UnsupportedClass("exp(%s) has no finite series form" % x)
    coeff, exponent, _ = infinitesimal.terms[0]
    return SurrealStream(
        scale.expr * coeff.expr**I / sympy.factorial(I),
        exponent.to_sympy() * I,
        bound=Ordinal.omega(),
    )
