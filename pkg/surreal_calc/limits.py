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

"""Limits of On-length sequences and of functions.

The limit of a sequence ``a_alpha`` indexed by all ordinals is the section

    ``{a : a < sup(U_i I_{j>=i} L(a_j)) | b : b > inf(U_i I_{j>=i} R(a_j))}``

where ``L(x)`` and ``R(x)`` are the classes of all numbers below and above
``x``.  The unions range over proper classes, so for closed-form sequences
the section is read off an asymptotic expansion in ``t = 1/alpha`` instead:

* a negative leading power means unbounded growth, and the limit is `.ON` or
  `.OFF`;
* otherwise the constant term is the limit.  Factors such as ``2^-alpha``
  that vanish faster than every power are dropped and flagged.

`seq_limit_oracle` evaluates the union-of-intersections literally over the
dyadics born by a given day, which keeps the definition testable at small
scale.  Limits of functions use the same engine with ``x = a +- t``, and
``x = 1/t`` at the ends of the line.
"""

from __future__ import annotations

import enum
import functools
import itertools
import logging
from fractions import Fraction
from typing import NamedTuple

import sympy

from .errors import (
    DomainError,
    EssentialSingularity,
    NotInClass,
    UndecidableAsymptotics,
    UnsupportedClass,
)
from .expr import ALPHA, H, OMEGA, T, X, check_in_class
from .foundations import from_sign_expansion, is_dyadic, render_expr
from .gaps import (
    INFTY,
    OFF,
    ON,
    DedekindSection,
    GapKind,
    SectionKind,
    SurrealStream,
    classify_gap,
    validate_section,
)
from .surreal import Surreal, simplest_between

__all__ = [
    "Approach",
    "FormalSeries",
    "LimitKind",
    "LimitResult",
    "OracleSection",
    "CauchyKind",
    "CauchyResult",
    "expand_asymptotic",
    "seq_limit",
    "seq_limit_oracle",
    "classify_cauchy",
    "fn_limit",
    "derivative",
    "is_weakly_continuous",
]

_LOGGER = logging.getLogger(__name__)

_SERIES_ORDERS = (1, 2, 4, 8, 16)
_LOG_SCALE = sympy.Symbol("L", positive=True)
_LOG_T = sympy.log(T)
_MAX_ORACLE_BOUND = 10
_SIDES = {"left": -1, "right": 1, "both": 0}


class _Oscillation(Exception):
    pass


# Expansion


class Approach(NamedTuple):
    """How the variable of an expression moves in an expansion.

    ``point`` is a `.Surreal` or one of the sections `.ON`, `.OFF`, `.INFTY`
    and ``-INFTY``.  At a number, ``side`` is -1 for an approach from the
    left and 1 from the right.
    """

    variable: sympy.Symbol
    point: Surreal | DedekindSection
    side: int = 1

    @classmethod
    def at_on(cls, variable: sympy.Symbol = ALPHA) -> Approach:
        return cls(variable, ON, -1)

    def is_end(self) -> bool:
        return isinstance(self.point, DedekindSection)

    def substitution(self) -> sympy.Expr:
        """Return the value of `variable` in terms of `.T`."""
        if not self.is_end():
            return self.point.to_sympy() + self.side * T
        if self.point in (ON, INFTY):
            return 1 / T
        return -1 / T

    def __str__(self) -> str:
        if self.is_end():
            return "%s -> %s" % (self.variable, self.point)
        return "%s -> %s%s" % (self.variable, self.point, "+" if self.side > 0 else "-")


class FormalSeries(NamedTuple):
    """A truncated expansion ``sum_k c_k t^p_k + O(t^order)``.

    Attributes:
        approach: Where the expanded variable goes as ``t -> 0+``.
        terms: ``(coefficient, power)`` pairs with strictly increasing
            rational powers and nonzero coefficients.  A coefficient may carry
            ``log(t)``.
        order: The power of the neglected remainder.
        exponentially_small: Whether factors vanishing faster than every power
            of ``t`` were dropped.
        expr: The expression that was expanded.
    """

    approach: Approach
    terms: tuple[tuple[sympy.Expr, Fraction], ...]
    order: Fraction
    exponentially_small: bool
    expr: sympy.Expr

    def coefficient(self, power) -> sympy.Expr:
        power = Fraction(power)
        for coeff, p in self.terms:
            if p == power:
                return coeff
        if power >= self.order:
            raise ValueError("t^%s is beyond the expansion order" % power)
        return sympy.S.Zero

    def extend(self, extra: int = 4) -> FormalSeries:
        """Return the expansion of the same expression to a higher order."""
        return expand_asymptotic(self.expr, self.approach, int(self.order) + extra)

    def __str__(self) -> str:
        body = sympy.Add(
            *(c * T ** sympy.Rational(p.numerator, p.denominator) for c, p in self.terms)
        )
        text = "%s + O(t^%s)" % (render_expr(body), self.order)
        if self.exponentially_small:
            text += " + exp-small"
        return text


def _lead(expr: sympy.Expr, t: sympy.Symbol) -> tuple[sympy.Expr, Fraction] | None:
    for order in _SERIES_ORDERS:
        terms = _collect(_series(expr, t, order), t)
        if terms:
            return terms[0]
    return None


def _series(expr: sympy.Expr, t: sympy.Symbol, order: int) -> sympy.Expr:
    try:
        return sympy.series(expr, t, 0, order).removeO()
    except sympy.PoleError as exc:
        raise EssentialSingularity("%s has no expansion at %s = 0" % (expr, t)) from exc
    except (NotImplementedError, ValueError, TypeError) as exc:
        raise UndecidableAsymptotics("cannot expand %s: %s" % (expr, exc)) from exc


def _collect(expr: sympy.Expr, t: sympy.Symbol) -> list[tuple[sympy.Expr, Fraction]]:
    by_power: dict[Fraction, list[sympy.Expr]] = {}
    for addend in sympy.Add.make_args(sympy.expand(expr)):
        power = sympy.S.Zero
        factors = []
        for factor in sympy.Mul.make_args(addend):
            base, exponent = factor.as_base_exp()
            if base == t:
                power += exponent
            else:
                factors.append(factor)
        if not power.is_Rational:
            raise UndecidableAsymptotics("%s has the irrational power %s" % (expr, power))
        coeff = sympy.Mul(*factors)
        if coeff.has(t) and coeff.subs(sympy.log(t), _LOG_SCALE).has(t):
            raise UndecidableAsymptotics("%s is not a series in %s" % (expr, t))
        by_power.setdefault(Fraction(int(power.p), int(power.q)), []).append(coeff)
    terms = []
    for power in sorted(by_power):
        coeff = _simplify(sympy.Add(*by_power[power]))
        if coeff != 0:
            terms.append((coeff, power))
    return terms


def _simplify(expr: sympy.Expr) -> sympy.Expr:
    return sympy.expand(sympy.simplify(expr))


def _sign(coeff: sympy.Expr) -> int:
    """Return the eventual sign of a coefficient that may involve ``w``.

    A coefficient carrying ``log(t)`` is a polynomial in ``-log(t)``, which
    grows without bound, so its leading coefficient decides.

    Raises:
        UndecidableAsymptotics: Neither normal forms nor sympy's assumptions
            decide it.
    """
    if coeff.has(_LOG_T):
        try:
            poly = sympy.Poly(coeff.subs(_LOG_T, -_LOG_SCALE), _LOG_SCALE)
        except sympy.PolynomialError as exc:
            raise UndecidableAsymptotics("cannot decide the sign of %s" % coeff) from exc
        return _sign(poly.LC())
    if coeff.free_symbols <= {OMEGA}:
        try:
            return Surreal.from_sympy(coeff).sign()
        except UnsupportedClass:
            pass
    if coeff.is_positive:
        return 1
    if coeff.is_negative:
        return -1
    if coeff.is_zero:
        return 0
    raise UndecidableAsymptotics("cannot decide the sign of %s" % coeff)


def _tame(
    expr: sympy.Expr, t: sympy.Symbol, small_bases: frozenset, flags: set
) -> sympy.Expr:
    # Replace exponentials that vanish faster than every power of t by zero.
    if not expr.has(t) or expr.is_Atom:
        return expr
    expr = expr.func(*(_tame(arg, t, small_bases, flags) for arg in expr.args))
    if isinstance(expr, sympy.exp):
        return _tame_growth(expr, expr.args[0], None, t, flags)
    if expr.is_Pow and expr.exp.has(t):
        base, exponent = expr.args
        if base.has(t):
            return _tame_growth(expr, exponent * sympy.log(base), None, t, flags)
        return _tame_growth(expr, exponent, _base_class(base, small_bases), t, flags)
    return expr


def _base_class(base: sympy.Expr, small_bases: frozenset) -> tuple[int, int]:
    # (sign of the base, sign of log|base|) for a base free of t.
    if base in small_bases:
        return (0, -1)
    if base.free_symbols - {OMEGA}:
        raise UndecidableAsymptotics("cannot bound the base %s" % base)
    value = Surreal.from_sympy(base)
    sign = value.sign()
    magnitude = value if sign >= 0 else -value
    return (sign, (magnitude > 1) - (magnitude < 1))


def _tame_growth(expr, exponent, base_class, t, flags) -> sympy.Expr:
    lead = _lead(exponent, t)
    if lead is None or lead[1] >= 0:
        if base_class is not None and base_class[0] < 0:
            raise _Oscillation(expr)
        return expr
    direction = _sign(lead[0])
    if base_class is not None:
        sign, size = base_class
        if size == 0:
            if sign < 0:
                raise _Oscillation(expr)
            return sympy.S.One
        direction *= size
        if sign < 0 and direction > 0:
            raise _Oscillation(expr)
    if direction < 0:
        flags.add(expr)
        return sympy.S.Zero
    raise EssentialSingularity("%s grows faster than every power" % expr)


def expand_asymptotic(
    expr: sympy.Expr,
    approach: Approach | None = None,
    order: int = 4,
    small_bases=(),
) -> FormalSeries:
    """Expand ``expr`` as its variable follows ``approach``.

    Args:
        expr: An expression of the closed-form class.
        approach: Defaults to `ALPHA` running through On.
        order: The power of ``t`` at which the expansion is truncated.
        small_bases: Symbolic bases known to lie strictly between -1 and 1,
            so that their powers vanish as the exponent grows.

    Raises:
        NotInClass: ``expr`` is outside the closed-form class.
        EssentialSingularity: An exponential grows faster than every power
            of ``t``, as ``exp(1/t)`` does as ``t -> 0+``.
        UndecidableAsymptotics: A sign or an expansion couldn't be decided.

    """
    approach = Approach.at_on() if approach is None else approach
    check_in_class(expr)
    return _expand(sympy.sympify(expr), approach, order, frozenset(small_bases))


@functools.lru_cache(maxsize=256)
def _expand(expr, approach, order, small_bases) -> FormalSeries:
    flags: set = set()
    substituted = expr.subs(approach.variable, approach.substitution())
    tamed = _tame(substituted, T, small_bases, flags)
    terms = _collect(_series(tamed, T, order), T)
    _LOGGER.debug("%s: %s ~ %s", approach, expr, terms)
    return FormalSeries(approach, tuple(terms), Fraction(order), bool(flags), expr)


# Results


class LimitKind(enum.Enum):
    NUMBER = "number"
    GAP = "gap"
    NO_LIMIT = "no-limit"


class LimitResult(NamedTuple):
    """The limit of a sequence or a function.

    Attributes:
        kind: `LimitKind.NUMBER`, `LimitKind.GAP` or `LimitKind.NO_LIMIT`.
        value: The limit as a `.Surreal`, for constant number limits.
        expr: The limit as an expression; symbolic when parameters remain.
        section: The section the sequence approaches, for gaps.
        reason: For no limit, one of ``oscillatory``, ``undefined-at-scale``,
            ``one-sided-limits-differ`` and ``inconclusive``.
        formula_only: Whether the section is what the limit formula gives,
            without the sequence being eventually within every ``e`` of it.
        conditions: Conditions the result depends on, such as ``-1 < x < 1``.
        provenance: Which engine produced the result.
    """

    kind: LimitKind
    value: Surreal | None = None
    expr: sympy.Expr | None = None
    section: DedekindSection | None = None
    reason: str | None = None
    formula_only: bool = False
    conditions: tuple[str, ...] = ()
    provenance: str = "asymptotic-expansion"

    @classmethod
    def number(cls, expr: sympy.Expr, **kwargs) -> LimitResult:
        value = None
        if expr.free_symbols <= {OMEGA}:
            try:
                value = Surreal.from_sympy(expr)
            except UnsupportedClass:
                value = None
        return cls(LimitKind.NUMBER, value=value, expr=expr, **kwargs)

    @classmethod
    def gap(cls, section: DedekindSection, **kwargs) -> LimitResult:
        kwargs.setdefault("formula_only", not section.is_end())
        return cls(LimitKind.GAP, section=section, **kwargs)

    @classmethod
    def no_limit(cls, reason: str, **kwargs) -> LimitResult:
        return cls(LimitKind.NO_LIMIT, reason=reason, **kwargs)

    def __str__(self) -> str:
        if self.kind is LimitKind.NUMBER:
            return str(self.value) if self.value is not None else render_expr(self.expr)
        if self.kind is LimitKind.GAP:
            return str(self.section)
        return "no limit (%s)" % self.reason


def _growth(series: FormalSeries) -> int:
    """Return 1 or -1 for unbounded growth, 0 for a bounded expansion."""
    if not series.terms:
        return 0
    coeff, power = series.terms[0]
    if power < 0 or power == 0 and coeff.has(_LOG_T):
        return _sign(coeff)
    return 0


def _constant(series: FormalSeries) -> sympy.Expr:
    for coeff, power in series.terms:
        if power == 0:
            if coeff.has(T):
                raise UndecidableAsymptotics("%s has no constant term" % series)
            return coeff
    return sympy.S.Zero


def _interpret(series: FormalSeries, **kwargs) -> LimitResult:
    approach = series.approach
    growth = _growth(series)
    if growth:
        if approach.point in (INFTY, -INFTY):
            return LimitResult.gap(INFTY if growth > 0 else -INFTY, formula_only=True, **kwargs)
        return LimitResult.gap(ON if growth > 0 else OFF, **kwargs)
    constant = _constant(series)
    if approach.point in (INFTY, -INFTY):
        following = _following_sign(series)
        if following:
            # Real arguments tending to INFTY carry the values along the
            # reals, so the limit sits just beside the constant.
            section = validate_section(
                DedekindSection.type_two(
                    Surreal.from_sympy(constant), following, DedekindSection.cut(0, "-")
                )
            )
            return LimitResult.gap(section, formula_only=True, **kwargs)
    return LimitResult.number(constant, **kwargs)


def _following_sign(series: FormalSeries) -> int:
    for _ in range(len(_SERIES_ORDERS)):
        for coeff, power in series.terms:
            if power > 0:
                return _sign(coeff)
        if series.exponentially_small:
            return 0
        series = series.extend()
    return 0


# Sequences


def seq_limit(expr, small_bases=()) -> LimitResult:
    """Return the limit of the On-length sequence ``alpha -> expr``.

    Args:
        expr: An expression in `ALPHA`; ``w`` and other parameters may occur.
        small_bases: Symbolic bases known to lie strictly between -1 and 1.

    Raises:
        NotInClass: ``expr`` is outside the closed-form class.

    Example:
        >>> print(seq_limit(2 - 2**-ALPHA))
        2
    """
    expr = check_in_class(sympy.sympify(expr))
    conditions = tuple("-1 < %s < 1" % render_expr(b) for b in small_bases)
    try:
        series = expand_asymptotic(expr, Approach.at_on(), 1, small_bases)
    except _Oscillation:
        return LimitResult.no_limit("oscillatory", conditions=conditions)
    except EssentialSingularity:
        return _gruntz_limit(expr, conditions)
    return _interpret(series, conditions=conditions)


def _gruntz_limit(expr: sympy.Expr, conditions: tuple[str, ...]) -> LimitResult:
    if expr.free_symbols - {ALPHA}:
        return LimitResult.no_limit("undefined-at-scale", conditions=conditions)
    _LOGGER.debug("falling back to sympy.limit for %s", expr)
    try:
        value = sympy.limit(expr, ALPHA, sympy.oo)
    except (NotImplementedError, ValueError) as exc:
        raise UndecidableAsymptotics("cannot take the limit of %s" % expr) from exc
    if value is sympy.oo:
        return LimitResult.gap(ON, conditions=conditions, provenance="gruntz")
    if value is sympy.S.NegativeInfinity:
        return LimitResult.gap(OFF, conditions=conditions, provenance="gruntz")
    if value.is_finite and value.is_real:
        return LimitResult.number(value, conditions=conditions, provenance="gruntz")
    return LimitResult.no_limit("inconclusive", conditions=conditions, provenance="gruntz")


class OracleSection(NamedTuple):
    """The limit formula evaluated over the dyadics born by a given day.

    Attributes:
        left: The union over ``i`` of the intersections of ``L(a_j)``,
            ``j >= i``.
        right: The same union for the right classes ``R(a_j)``.
        undecided: Universe elements in neither class.
        bound: The birthday bound of the universe.
    """

    left: tuple[Fraction, ...]
    right: tuple[Fraction, ...]
    undecided: tuple[Fraction, ...]
    bound: int

    def converges(self) -> bool:
        """Return whether the classes leave at most one number between them."""
        return len(self.undecided) <= 1

    def simplest(self) -> Surreal:
        """Return the number ``{a : a < sup left | b : b > inf right}``."""
        left = [a for a in self.left if a < max(self.left)] if self.left else []
        right = [b for b in self.right if b > min(self.right)] if self.right else []
        return simplest_between(left, right)


@functools.lru_cache(maxsize=16)
def _universe(bound: int) -> tuple[Fraction, ...]:
    values = {
        from_sign_expansion("".join(signs))
        for length in range(bound + 1)
        for signs in itertools.product("+-", repeat=length)
    }
    return tuple(sorted(values))


def seq_limit_oracle(prefix, birthday_bound: int = 6) -> OracleSection:
    """Evaluate the limit formula literally on a finite prefix.

    The intersections run over the tail of ``prefix`` from ``i`` on, for
    ``i`` in the first half of the prefix, so every intersection sees at
    least half the sequence.

    Raises:
        UnsupportedClass: An element is not a dyadic rational, or the bound
            exceeds 10.
    """
    if birthday_bound > _MAX_ORACLE_BOUND:
        raise UnsupportedClass(
            "birthday bound %d exceeds %d" % (birthday_bound, _MAX_ORACLE_BOUND)
        )
    values = []
    for element in prefix:
        value = Surreal.coerce(element).as_fraction()
        if value is None or not is_dyadic(value):
            raise UnsupportedClass("%s is not a dyadic rational" % element)
        values.append(value)
    if not values:
        raise UnsupportedClass("the oracle needs a nonempty prefix")
    universe = _universe(birthday_bound)
    left, right = set(), set()
    for i in range(len(values) // 2 + 1):
        tail = values[i:]
        left |= {u for u in universe if all(u < a for a in tail)}
        right |= {u for u in universe if all(u > a for a in tail)}
    undecided = tuple(u for u in universe if u not in left and u not in right)
    return OracleSection(tuple(sorted(left)), tuple(sorted(right)), undecided, birthday_bound)


class CauchyKind(enum.Enum):
    CONVERGES_TO = "converges-to"
    APPROACHES_TYPE_IA = "approaches-type-ia"
    NOT_CAUCHY = "not-cauchy"


class CauchyResult(NamedTuple):
    """The Cauchy classification of an On-length sequence."""

    kind: CauchyKind
    value: Surreal | sympy.Expr | None = None
    section: DedekindSection | None = None
    reason: str | None = None

    def __str__(self) -> str:
        if self.kind is CauchyKind.CONVERGES_TO:
            shown = self.value if isinstance(self.value, Surreal) else render_expr(self.value)
            return "ConvergesTo(%s)" % shown
        if self.kind is CauchyKind.APPROACHES_TYPE_IA:
            return "ApproachesTypeIa(%s)" % self.section
        return "NotCauchy(%s)" % self.reason


CauchyResult.kind.__doc__ = "Which of the three outcomes applies."
CauchyResult.value.__doc__ = "The number a convergent sequence tends to."
CauchyResult.section.__doc__ = "The Type Ia gap an approaching sequence tends to."
CauchyResult.reason.__doc__ = "Why a sequence is not Cauchy."


def classify_cauchy(sequence) -> CauchyResult:
    """Classify a sequence as convergent, approaching a Type Ia gap, or not Cauchy.

    A Cauchy sequence either converges or approaches a gap of type Ia; a
    sequence approaching any other gap is not Cauchy.

    Args:
        sequence: An expression in `ALPHA`, or a `.SurrealStream` whose
            partial sums form the sequence.

    Raises:
        NotInClass: The expression is outside the closed-form class.
    """
    if isinstance(sequence, SurrealStream):
        return _classify_partial_sums(sequence)
    expr = sympy.sympify(sequence)
    result = seq_limit(expr)
    if result.kind is LimitKind.NO_LIMIT:
        return CauchyResult(CauchyKind.NOT_CAUCHY, reason=result.reason)
    if result.kind is LimitKind.GAP:
        if result.section.is_end():
            return CauchyResult(CauchyKind.NOT_CAUCHY, reason="unbounded")
        return CauchyResult(CauchyKind.NOT_CAUCHY, reason="approaches a Type II gap")
    step = seq_limit(expr.subs(ALPHA, ALPHA + 1) - expr)
    if step.kind is not LimitKind.NUMBER or step.expr != 0:
        return CauchyResult(CauchyKind.NOT_CAUCHY, reason="steps do not vanish")
    value = result.value if result.value is not None else result.expr
    return CauchyResult(CauchyKind.CONVERGES_TO, value=value)


def _classify_partial_sums(stream: SurrealStream) -> CauchyResult:
    section = validate_section(DedekindSection.type_one(stream))
    if section.kind is SectionKind.NUMBER:
        return CauchyResult(CauchyKind.CONVERGES_TO, value=section.number)
    kind = classify_gap(section)
    if kind is GapKind.TYPE_IA:
        return CauchyResult(CauchyKind.APPROACHES_TYPE_IA, section=section)
    return CauchyResult(CauchyKind.NOT_CAUCHY, reason="approaches a Type Ib gap")


# Functions


def _point(a) -> Surreal | DedekindSection:
    if isinstance(a, DedekindSection):
        if a.kind is SectionKind.NUMBER:
            return a.number
        if a not in (ON, OFF, INFTY, -INFTY):
            raise DomainError("limits at %s are not supported" % a)
        return a
    if isinstance(a, sympy.Basic):
        return Surreal.from_sympy(a)
    return Surreal.coerce(a)


def fn_limit(expr, a, side: str = "both", variable: sympy.Symbol = X) -> LimitResult:
    """Return the limit of ``expr`` as ``variable`` tends to ``a``.

    Args:
        expr: An expression in ``variable``.
        a: A number, or one of `.ON`, `.OFF`, `.INFTY` and ``-INFTY``.
        side: ``left``, ``right`` or ``both``.  Ignored at the ends of the
            line; `.INFTY` is approached from the left and ``-INFTY`` from
            the right.
        variable: The variable of ``expr``.

    Raises:
        NotInClass: ``expr`` is outside the closed-form class.
        EssentialSingularity: ``expr`` has an essential singularity at ``a``
            on the requested side.
        DomainError: ``a`` is a gap other than those named above, or
            ``side`` is not one of the three names.

    Example:
        >>> print(fn_limit((sympy.exp(X) - 1) / X, 0))
        1
    """
    if side not in _SIDES:
        raise DomainError("side must be left, right or both, not %r" % side)
    expr = check_in_class(sympy.sympify(expr))
    point = _point(a)
    if isinstance(point, DedekindSection):
        if point == INFTY and side == "right" or point == -INFTY and side == "left":
            raise DomainError("%s can only be approached from the reals" % point)
        return _one_sided(expr, Approach(variable, point, -1 if point in (ON, INFTY) else 1))
    if side != "both":
        return _one_sided(expr, Approach(variable, point, _SIDES[side]))
    below = _one_sided(expr, Approach(variable, point, -1))
    above = _one_sided(expr, Approach(variable, point, 1))
    if below.kind is above.kind is LimitKind.NUMBER and _same(below.expr, above.expr):
        return above
    if below.kind is above.kind is LimitKind.GAP and below.section == above.section:
        return above
    return LimitResult.no_limit("one-sided-limits-differ")


def _same(a: sympy.Expr, b: sympy.Expr) -> bool:
    return _simplify(a - b) == 0


def _one_sided(expr: sympy.Expr, approach: Approach) -> LimitResult:
    try:
        series = expand_asymptotic(expr, approach, 1)
    except _Oscillation:
        return LimitResult.no_limit("oscillatory")
    return _interpret(series)


def derivative(expr, x0=None, variable: sympy.Symbol = X):
    """Return ``d/dx expr`` as the limit of the difference quotient.

    The quotient ``(f(x + h) - f(x))/h`` is expanded in ``h`` with ``x`` kept
    symbolic.  Without ``x0`` the derivative is returned as an expression in
    ``variable``, otherwise its value at ``x0``.

    Raises:
        NotInClass: The difference quotient has no number limit.

    Example:
        >>> derivative(X**2)
        2*x
    """
    expr = check_in_class(sympy.sympify(expr))
    quotient = (expr.subs(variable, variable + H) - expr) / H
    result = fn_limit(quotient, 0, variable=H)
    if result.kind is not LimitKind.NUMBER:
        raise NotInClass("the difference quotient of %s has no limit: %s" % (expr, result))
    value = result.expr
    if x0 is None:
        return value
    return Surreal.from_sympy(value.subs(variable, _point(x0).to_sympy()))


def is_weakly_continuous(expr, a) -> bool:
    """Return whether the two-sided limit of ``expr`` at ``a`` is its value there."""
    expr = check_in_class(sympy.sympify(expr))
    point = _point(a)
    if isinstance(point, DedekindSection):
        return False
    try:
        value = expr.subs(X, point.to_sympy())
        limit = fn_limit(expr, point)
    except (NotInClass, UnsupportedClass):
        return False
    if limit.kind is not LimitKind.NUMBER or value.has(sympy.zoo, sympy.nan):
        return False
    return _same(limit.expr, value)
