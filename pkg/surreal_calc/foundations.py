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

"""Exact scalars: rationals, closed-form reals, and ordinals.

Three scalar types underpin every other module:

* `Rational` is `fractions.Fraction`.  Dyadic rationals (power of two
  denominators) are the reals born on finite days, and this module provides
  their sign expansions.
* `ExactReal` is a real number given by a closed-form `sympy` expression over
  the rationals, ``pi`` and ``e``, closed under the field operations and
  ``exp``, ``log`` and ``arctan``.  Order questions are decided by refining
  rational enclosures with `mpmath`'s interval context.
* `Ordinal` is an ordinal below epsilon-zero in Cantor normal form.

Equality of `ExactReal` values is decided by a fixed normalization rule set:
sympy's automatic evaluation (``atan(1) -> pi/4``, ``log(1) -> 0``,
``exp(0) -> 1``), logarithm expansion and polynomial expansion.  Two values
that the rules cannot prove equal compare as `Ordering.INCONCLUSIVE` once the
refinement budget is spent on a possible tie.
"""

from __future__ import annotations

import enum
import functools
import logging
import threading
from collections.abc import Callable, Iterable
from fractions import Fraction

import mpmath.libmp
import sympy
from mpmath.ctx_iv import MPIntervalContext
from sympy.printing.str import StrPrinter

from .config import DEFAULT_SETTINGS, Settings
from .errors import DomainError, InconclusiveComparison, PrecisionExhausted

__all__ = [
    "Rational",
    "Ordering",
    "ExactReal",
    "PI",
    "E",
    "Ordinal",
    "exactreal_refine",
    "exactreal_compare",
    "ordinal_add",
    "ordinal_mul",
    "ordinal_compare",
    "is_dyadic",
    "sign_expansion",
    "from_sign_expansion",
    "render_expr",
]

_LOGGER = logging.getLogger(__name__)

Rational = Fraction

OMEGA_NAME = "omega"


class Ordering(enum.Enum):
    """Outcome of comparing two exactly represented values."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCONCLUSIVE = "inconclusive"

    @classmethod
    def of(cls, difference: int | Fraction) -> Ordering:
        """Return the ordering matching the sign of ``difference``."""
        if difference < 0:
            return cls.LESS
        if difference > 0:
            return cls.GREATER
        return cls.EQUAL

    def reverse(self) -> Ordering:
        if self is Ordering.LESS:
            return Ordering.GREATER
        if self is Ordering.GREATER:
            return Ordering.LESS
        return self


class _Printer(StrPrinter):
    """String printer using the calculator's input syntax."""

    def _print_Exp1(self, expr):
        return "e"

    def _print_Symbol(self, expr):
        if expr.name == OMEGA_NAME:
            return "w"
        return expr.name

    def _print_Function(self, expr):
        if expr.func is sympy.atan:
            return "arctan(%s)" % self.stringify(expr.args, ", ")
        return super()._print_Function(expr)


def render_expr(expr: sympy.Expr) -> str:
    """Render a sympy expression in the calculator's input syntax."""
    return _Printer().doprint(expr).replace("**", "^")


# Rational helpers


def is_dyadic(value: Fraction) -> bool:
    """Return whether ``value`` has a power of two denominator."""
    denominator = value.denominator
    return denominator & (denominator - 1) == 0


def sign_expansion(value: Fraction) -> str:
    """Return the sign expansion of a dyadic rational as a string of ``+-``.

    The length of the expansion is the day on which the number is born.

    Example:
        >>> sign_expansion(Fraction(3, 4))
        '+-+'
    """
    if not is_dyadic(value):
        raise DomainError("%s is not a dyadic rational" % value)
    if value < 0:
        return sign_expansion(-value).translate(str.maketrans("+-", "-+"))
    whole = value.numerator // value.denominator
    fraction = value - whole
    if not fraction:
        return "+" * whole
    bits = []
    while fraction:
        fraction *= 2
        bit = int(fraction >= 1)
        bits.append(bit)
        fraction -= bit
    # The final 1 bit is implied by the leading "-".
    tail = "".join("+" if bit else "-" for bit in bits[:-1])
    return "+" * (whole + 1) + "-" + tail


def from_sign_expansion(signs: str) -> Fraction:
    """Return the dyadic rational with the given finite sign expansion."""
    value = Fraction(0)
    position = 0
    while position < len(signs) and signs[position] == signs[0]:
        value += 1 if signs[position] == "+" else -1
        position += 1
    step = Fraction(1, 2)
    for sign in signs[position:]:
        value += step if sign == "+" else -step
        step /= 2
    return value


# Exact reals

_ALLOWED_FUNCTIONS = (sympy.exp, sympy.log, sympy.atan)
_START_PRECISION = 64
_MAX_PRECISION = 1 << 16

_IV_LOCAL = threading.local()
_CACHE_LOCK = threading.Lock()


def _interval_context() -> MPIntervalContext:
    # Interval contexts carry their working precision, so each thread gets
    # its own.
    ctx = getattr(_IV_LOCAL, "context", None)
    if ctx is None:
        ctx = _IV_LOCAL.context = MPIntervalContext()
    return ctx


def _normalize(expr: sympy.Expr) -> sympy.Expr:
    return sympy.expand(sympy.expand_log(expr, force=True))


def _check_closed_form(expr: sympy.Expr) -> None:
    if expr.free_symbols:
        raise ValueError("%s is not a constant" % expr)
    for node in sympy.preorder_traversal(expr):
        if node.is_Rational or node in (sympy.pi, sympy.E):
            continue
        if node.is_Add or node.is_Mul or node.is_Pow:
            continue
        if isinstance(node, _ALLOWED_FUNCTIONS):
            continue
        raise ValueError("%s is not an exact real expression" % node)


class _NodeBudget:
    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.spent = 0

    def spend(self) -> None:
        self.spent += 1
        if self.spent > self.limit:
            raise PrecisionExhausted(
                "refinement used more than %d node evaluations" % self.limit
            )


def _enclose(expr: sympy.Expr, ctx: MPIntervalContext, budget: _NodeBudget):
    budget.spend()
    if expr.is_Rational:
        return ctx.convert(int(expr.p)) / ctx.convert(int(expr.q))
    if expr is sympy.pi:
        return +ctx.pi
    if expr is sympy.E:
        return +ctx.e
    if expr.is_Add:
        total = _enclose(expr.args[0], ctx, budget)
        for arg in expr.args[1:]:
            total = total + _enclose(arg, ctx, budget)
        return total
    if expr.is_Mul:
        product = _enclose(expr.args[0], ctx, budget)
        for arg in expr.args[1:]:
            product = product * _enclose(arg, ctx, budget)
        return product
    if expr.is_Pow:
        base = _enclose(expr.base, ctx, budget)
        if expr.exp.is_Integer:
            return base ** int(expr.exp)
        if expr.exp == sympy.S.Half:
            return ctx.sqrt(base)
        return ctx.exp(_enclose(expr.exp, ctx, budget) * ctx.ln(base))
    if isinstance(expr, sympy.exp):
        return ctx.exp(_enclose(expr.args[0], ctx, budget))
    if isinstance(expr, sympy.log):
        return ctx.ln(_enclose(expr.args[0], ctx, budget))
    if isinstance(expr, sympy.atan):
        return ctx.atan2(_enclose(expr.args[0], ctx, budget), ctx.one)
    raise ValueError("cannot enclose %s" % expr)


_SPECIAL_ENDPOINTS = (mpmath.libmp.finf, mpmath.libmp.fninf, mpmath.libmp.fnan)


def _endpoints(interval) -> tuple[Fraction, Fraction] | None:
    low, high = interval._mpi_
    if low in _SPECIAL_ENDPOINTS or high in _SPECIAL_ENDPOINTS:
        return None
    return (
        Fraction(*mpmath.libmp.to_rational(low)),
        Fraction(*mpmath.libmp.to_rational(high)),
    )


class ExactReal:
    """A real number given by a closed-form expression.

    Instances are immutable, hashable, and built from `int`, `fractions.Fraction`
    or a constant `sympy.Expr` whose nodes are rationals, ``pi``, ``e``, sums,
    products, powers, ``exp``, ``log`` and ``atan``.  Rational values keep a
    `fractions.Fraction` fast path and never touch sympy or mpmath.

    The only mutable state is the cached enclosing interval, which is narrowed
    under a lock so that successive refinements are nested.

    Example:
        >>> ExactReal(sympy.atan(1)) == PI / 4
        True
        >>> ExactReal(Fraction(1, 3)) < ExactReal(sympy.pi)
        True
    """

    __slots__ = ("_rational", "_expr", "_cache")

    def __init__(self, value: int | Fraction | sympy.Expr | ExactReal = 0) -> None:
        self._cache = None
        if isinstance(value, ExactReal):
            self._rational = value._rational
            self._expr = value._expr
            return
        if isinstance(value, (int, Fraction)):
            self._rational = Fraction(value)
            self._expr = None
            return
        expr = _normalize(sympy.sympify(value))
        _check_closed_form(expr)
        if expr.is_Rational:
            self._rational = Fraction(int(expr.p), int(expr.q))
            self._expr = None
        else:
            self._rational = None
            self._expr = expr

    @property
    def expr(self) -> sympy.Expr:
        """The normalized sympy expression of this value."""
        if self._expr is None:
            return sympy.Rational(self._rational.numerator, self._rational.denominator)
        return self._expr

    @property
    def rational(self) -> Fraction | None:
        """The value as a `fractions.Fraction`, or ``None`` if irrational."""
        return self._rational

    def is_rational(self) -> bool:
        return self._rational is not None

    def is_zero(self) -> bool:
        return self._rational is not None and self._rational == 0

    def refine(
        self,
        target_width: Fraction,
        max_nodes: int = DEFAULT_SETTINGS.budget_nodes,
        stop: Callable[[Fraction, Fraction], bool] | None = None,
    ) -> tuple[Fraction, Fraction]:
        """Return a rational interval ``(lo, hi)`` enclosing this value.

        Precision doubles until ``hi - lo <= target_width`` or until ``stop``
        returns true for the current enclosure.

        Raises:
            PrecisionExhausted: More than ``max_nodes`` expression nodes were
                evaluated, or the working precision grew past its cap.
        """
        if target_width <= 0:
            raise ValueError("target_width must be positive")
        if self._rational is not None:
            return self._rational, self._rational
        cached = self._cache
        if cached is not None and (
            cached[1] - cached[0] <= target_width or (stop and stop(*cached))
        ):
            return cached
        ctx = _interval_context()
        budget = _NodeBudget(max_nodes)
        precision = _START_PRECISION
        while precision <= _MAX_PRECISION:
            ctx.prec = precision
            try:
                enclosure = _endpoints(_enclose(self._expr, ctx, budget))
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError("%s is not a finite real" % self) from exc
            if enclosure is not None:
                enclosure = self._narrow(*enclosure)
                low, high = enclosure
                if high - low <= target_width or (stop and stop(low, high)):
                    return enclosure
            precision *= 2
            _LOGGER.debug("refining %s at %d bits", self, precision)
        raise PrecisionExhausted("%s needs more than %d bits" % (self, _MAX_PRECISION))

    def _narrow(self, low: Fraction, high: Fraction) -> tuple[Fraction, Fraction]:
        with _CACHE_LOCK:
            if self._cache is not None:
                low = max(low, self._cache[0])
                high = min(high, self._cache[1])
            self._cache = (low, high)
            return self._cache

    def sign(self, settings: Settings = DEFAULT_SETTINGS) -> int:
        """Return -1, 0 or 1.

        Raises:
            InconclusiveComparison: The sign couldn't be decided within the
                refinement budget.
        """
        if self._rational is not None:
            return (self._rational > 0) - (self._rational < 0)
        ordering = exactreal_compare(self, ZERO, settings)
        if ordering is Ordering.INCONCLUSIVE:
            raise InconclusiveComparison("cannot decide the sign of %s" % self)
        return {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}[ordering]

    # Field operations

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._rational is not None and other._rational is not None:
            return ExactReal(self._rational + other._rational)
        return ExactReal(self.expr + other.expr)

    __radd__ = __add__

    def __neg__(self) -> ExactReal:
        if self._rational is not None:
            return ExactReal(-self._rational)
        return ExactReal(-self.expr)

    def __pos__(self) -> ExactReal:
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._rational is not None and other._rational is not None:
            return ExactReal(self._rational * other._rational)
        return ExactReal(self.expr * other.expr)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division of %s by zero" % self)
        if self._rational is not None and other._rational is not None:
            return ExactReal(self._rational / other._rational)
        return ExactReal(self.expr / other.expr)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int) -> ExactReal:
        if not isinstance(exponent, int):
            return NotImplemented
        if self._rational is not None:
            if exponent < 0 and not self._rational:
                raise ZeroDivisionError("zero to a negative power")
            return ExactReal(self._rational**exponent)
        return ExactReal(self.expr**exponent)

    def __abs__(self) -> ExactReal:
        return -self if self.sign() < 0 else self

    def exp(self) -> ExactReal:
        return ExactReal(sympy.exp(self.expr))

    def log(self) -> ExactReal:
        if self.sign() <= 0:
            raise DomainError("log of non-positive %s" % self)
        return ExactReal(sympy.log(self.expr))

    def atan(self) -> ExactReal:
        return ExactReal(sympy.atan(self.expr))

    # Comparison

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._rational is not None and other._rational is not None:
            return self._rational == other._rational
        if (self._rational is None) != (other._rational is None):
            return False
        return _normalize(self.expr - other.expr) == 0

    def __hash__(self) -> int:
        if self._rational is not None:
            return hash(self._rational)
        return hash(self._expr)

    def _ordering(self, other) -> Ordering:
        ordering = exactreal_compare(self, _coerce(other))
        if ordering is Ordering.INCONCLUSIVE:
            raise InconclusiveComparison("cannot order %s and %s" % (self, other))
        return ordering

    def __lt__(self, other) -> bool:
        return self._ordering(other) is Ordering.LESS

    def __le__(self, other) -> bool:
        return self._ordering(other) is not Ordering.GREATER

    def __gt__(self, other) -> bool:
        return self._ordering(other) is Ordering.GREATER

    def __ge__(self, other) -> bool:
        return self._ordering(other) is not Ordering.LESS

    def __str__(self) -> str:
        if self._rational is not None:
            return str(self._rational)
        return render_expr(self._expr)

    def __repr__(self) -> str:
        return "ExactReal(%s)" % self


def _coerce(value) -> ExactReal:
    if isinstance(value, ExactReal):
        return value
    if isinstance(value, (int, Fraction)):
        return ExactReal(value)
    return NotImplemented


ZERO = ExactReal(0)
ONE = ExactReal(1)
PI = ExactReal(sympy.pi)
E = ExactReal(sympy.E)


def exactreal_refine(
    x: ExactReal, target_width: Fraction, settings: Settings = DEFAULT_SETTINGS
) -> tuple[Fraction, Fraction]:
    """Return a rational interval of width at most ``target_width`` around ``x``.

    Raises:
        PrecisionExhausted: The node evaluation cap in ``settings`` was hit.
    """
    return x.refine(Fraction(target_width), settings.budget_nodes)


def exactreal_compare(
    a: ExactReal, b: ExactReal, settings: Settings = DEFAULT_SETTINGS
) -> Ordering:
    """Compare two exact reals.

    `Ordering.LESS` and `Ordering.GREATER` are only returned when disjoint
    enclosures prove them, and `Ordering.EQUAL` only when normalization
    proves the difference is zero.  Everything else is
    `Ordering.INCONCLUSIVE`.
    """
    if a.rational is not None and b.rational is not None:
        return Ordering.of(a.rational - b.rational)
    difference = a - b
    if difference.rational is not None:
        return Ordering.of(difference.rational)
    try:
        low, high = difference.refine(
            settings.budget_width,
            settings.budget_nodes,
            stop=lambda low, high: low > 0 or high < 0,
        )
    except PrecisionExhausted:
        return Ordering.INCONCLUSIVE
    if low > 0:
        return Ordering.GREATER
    if high < 0:
        return Ordering.LESS
    _LOGGER.debug("possible tie between %s and %s", a, b)
    return Ordering.INCONCLUSIVE


# Ordinals


@functools.total_ordering
class Ordinal:
    """An ordinal below epsilon-zero in Cantor normal form.

    ``terms`` is a tuple of ``(exponent, count)`` pairs with strictly
    decreasing `Ordinal` exponents and positive integer counts, so that the
    ordinal is ``w^e1*c1 + w^e2*c2 + ...``.  The empty tuple is zero.

    Arithmetic follows the usual non-commutative ordinal sum and product;
    `natural_add` is the commutative Hessenberg sum.

    Example:
        >>> Ordinal.finite(1) + Ordinal.omega()
        Ordinal(w)
        >>> Ordinal.omega() * 2
        Ordinal(w*2)
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[Ordinal, int]] = ()) -> None:
        terms = tuple((exponent, int(count)) for exponent, count in terms)
        for index, (exponent, count) in enumerate(terms):
            if not isinstance(exponent, Ordinal):
                raise TypeError("ordinal exponents must be ordinals")
            if count < 1:
                raise ValueError("ordinal counts must be positive")
            if index and not exponent < terms[index - 1][0]:
                raise ValueError("ordinal exponents must strictly decrease")
        self.terms = terms

    @classmethod
    def finite(cls, n: int) -> Ordinal:
        if n < 0:
            raise ValueError("ordinals are non-negative")
        return cls(((_ORDINAL_ZERO, n),)) if n else _ORDINAL_ZERO

    @classmethod
    def omega(cls, exponent: Ordinal | int = 1) -> Ordinal:
        """Return ``w^exponent``."""
        if isinstance(exponent, int):
            exponent = cls.finite(exponent)
        return cls(((exponent, 1),))

    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return all(exponent.is_zero() for exponent, _ in self.terms)

    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero()

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def __int__(self) -> int:
        if not self.is_finite():
            raise ValueError("%s is not finite" % self)
        return self.terms[0][1] if self.terms else 0

    def predecessor(self) -> Ordinal:
        if not self.is_successor():
            raise ValueError("%s has no predecessor" % self)
        *head, (exponent, count) = self.terms
        if count > 1:
            head.append((exponent, count - 1))
        return Ordinal(head)

    def cofinal(self, n: int) -> Ordinal:
        """Return the ``n``-th element of the canonical cofinal sequence.

        For a limit ordinal ``x`` the sequence increases to ``x``; for
        ``w`` it is ``n`` itself.
        """
        if not self.is_limit():
            raise ValueError("%s is not a limit ordinal" % self)
        *head, (exponent, count) = self.terms
        if count > 1:
            head.append((exponent, count - 1))
        base = Ordinal(head)
        if exponent.is_successor():
            step = Ordinal.omega(exponent.predecessor()) * n
        else:
            step = Ordinal.omega(exponent.cofinal(n))
        return base + step

    def __add__(self, other: Ordinal | int) -> Ordinal:
        if isinstance(other, int):
            other = Ordinal.finite(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ordinal_add(self, other)

    def __radd__(self, other: int) -> Ordinal:
        if isinstance(other, int):
            return ordinal_add(Ordinal.finite(other), self)
        return NotImplemented

    def __mul__(self, other: Ordinal | int) -> Ordinal:
        if isinstance(other, int):
            other = Ordinal.finite(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ordinal_mul(self, other)

    def __rmul__(self, other: int) -> Ordinal:
        if isinstance(other, int):
            return ordinal_mul(Ordinal.finite(other), self)
        return NotImplemented

    def natural_add(self, other: Ordinal) -> Ordinal:
        """Return the natural (Hessenberg) sum, which is commutative."""
        counts: dict[Ordinal, int] = {}
        for exponent, count in self.terms + other.terms:
            counts[exponent] = counts.get(exponent, 0) + count
        return Ordinal(sorted(counts.items(), key=lambda term: term[0], reverse=True))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_finite() and int(self) == other
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other: Ordinal | int) -> bool:
        if isinstance(other, int):
            other = Ordinal.finite(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ordinal_compare(self, other) is Ordering.LESS

    def __hash__(self) -> int:
        if self.is_finite():
            return hash(int(self))
        return hash(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exponent, count in self.terms:
            if exponent.is_zero():
                parts.append(str(count))
                continue
            if exponent == 1:
                power = "w"
            elif exponent.is_finite() or exponent.terms[0][1] == 1 and len(exponent.terms) == 1:
                power = "w^%s" % exponent
            else:
                power = "w^(%s)" % exponent
            parts.append(power if count == 1 else "%s*%d" % (power, count))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return "Ordinal(%s)" % self


_ORDINAL_ZERO = Ordinal()


def ordinal_compare(a: Ordinal, b: Ordinal) -> Ordering:
    """Compare two ordinals lexicographically on their normal forms."""
    for (exp_a, count_a), (exp_b, count_b) in zip(a.terms, b.terms):
        ordering = ordinal_compare(exp_a, exp_b)
        if ordering is not Ordering.EQUAL:
            return ordering
        if count_a != count_b:
            return Ordering.of(count_a - count_b)
    return Ordering.of(len(a.terms) - len(b.terms))


def ordinal_add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Return the ordinal sum ``a + b``; terms of ``a`` below ``b``'s lead vanish."""
    if b.is_zero():
        return a
    lead, lead_count = b.terms[0]
    head = []
    for exponent, count in a.terms:
        ordering = ordinal_compare(exponent, lead)
        if ordering is Ordering.GREATER:
            head.append((exponent, count))
        elif ordering is Ordering.EQUAL:
            lead_count += count
            break
        else:
            break
    return Ordinal(head + [(lead, lead_count)] + list(b.terms[1:]))


def ordinal_mul(a: Ordinal, b: Ordinal) -> Ordinal:
    """Return the ordinal product ``a * b``."""
    if a.is_zero() or b.is_zero():
        return _ORDINAL_ZERO
    lead, lead_count = a.terms[0]
    product = _ORDINAL_ZERO
    for exponent, count in b.terms:
        if exponent.is_zero():
            piece = Ordinal(((lead, lead_count * count),) + a.terms[1:])
        else:
            piece = Ordinal(((ordinal_add(lead, exponent), count),))
        product = ordinal_add(product, piece)
    return product
