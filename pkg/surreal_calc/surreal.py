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

"""Surreal numbers in Conway normal form.

A `Surreal` is a finite sum ``r1*w^y1 + r2*w^y2 + ...`` with nonzero
`.ExactReal` coefficients and strictly decreasing surreal exponents.  Normal
forms are unique, so equality is structural and hashing is cheap.

Besides ``w``-powers a term may carry a restricted exponential monomial
``exp(p)`` for a purely infinite ``p``.  These atoms are ordered above every
power of ``w`` when ``p > 0`` and below every one when ``p < 0``, atoms compare
by their arguments, and multiplying two atoms together is rejected with
`.UnsupportedClass`.

The module also provides the genetic side of the theory: `GeneticForm`
values ``{L | R}``, the recursive `conway_arith_oracle` used as ground truth
on dyadics, the simplicity theorem as `simplest_between`, `birthday` and
`to_genetic`.

Example:
    >>> x = OMEGA + Surreal(1) / OMEGA
    >>> print(x + (Surreal(1) - Surreal(1) / OMEGA))
    w + 1
"""

from __future__ import annotations

import dataclasses
import functools
import logging
import math
import re
from collections.abc import Callable, Iterable
from fractions import Fraction
from typing import NamedTuple

import sympy

from .errors import (
    DepthExceeded,
    DomainError,
    IllFormed,
    InconclusiveComparison,
    UnsupportedClass,
)
from .foundations import (
    OMEGA_NAME,
    ExactReal,
    Ordering,
    Ordinal,
    from_sign_expansion,
    is_dyadic,
    sign_expansion,
)

__all__ = [
    "Term",
    "Surreal",
    "ZERO",
    "ONE",
    "OMEGA",
    "OMEGA_SYMBOL",
    "Family",
    "GeneticForm",
    "surreal_normalize",
    "surreal_add",
    "surreal_neg",
    "surreal_mul",
    "surreal_compare",
    "compare_monomials",
    "conway_arith_oracle",
    "simplest_between",
    "birthday",
    "to_genetic",
]

_LOGGER = logging.getLogger(__name__)

OMEGA_SYMBOL = sympy.Symbol(OMEGA_NAME, positive=True)

_SIMPLE_EXPONENT = re.compile(r"-?[A-Za-z0-9]+\Z")


class Term(NamedTuple):
    """One term ``coeff * exp(atom) * w^exponent`` of a normal form."""

    coeff: ExactReal
    exponent: Surreal
    atom: Surreal


Term.coeff.__doc__ = "The nonzero real coefficient."
Term.exponent.__doc__ = "The exponent of ``w``."
Term.atom.__doc__ = "Argument of the exponential atom, or zero for none."


def _as_int(ordering: Ordering) -> int:
    if ordering is Ordering.LESS:
        return -1
    if ordering is Ordering.GREATER:
        return 1
    return 0


def compare_monomials(a: Term, b: Term) -> int:
    """Compare the monomials of two terms, ignoring their coefficients."""
    if a.atom == b.atom:
        if a.exponent == b.exponent:
            return 0
        return _as_int(surreal_compare(a.exponent, b.exponent))
    return _as_int(surreal_compare(a.atom, b.atom))


_MONOMIAL_KEY = functools.cmp_to_key(compare_monomials)


@functools.total_ordering
class Surreal:
    """A surreal number in Conway normal form.

    Instances are immutable.  Build them from numbers with the constructor,
    from raw terms with `surreal_normalize`, or with the arithmetic
    operators starting from `OMEGA`.

    Args:
        value: An `int`, `fractions.Fraction`, `.ExactReal`, `.Ordinal`
            or `Surreal`.  Omitted, the value is zero.
    """

    __slots__ = ("terms", "_hash")

    def __init__(
        self, value: int | Fraction | ExactReal | Ordinal | Surreal | None = None
    ) -> None:
        self._hash = None
        if value is None:
            self.terms = ()
        elif isinstance(value, Surreal):
            self.terms = value.terms
        elif isinstance(value, Ordinal):
            self.terms = Surreal.from_ordinal(value).terms
        else:
            coeff = ExactReal(value)
            self.terms = () if coeff.is_zero() else (Term(coeff, ZERO, ZERO),)

    @classmethod
    def _from_terms(cls, terms: tuple[Term, ...]) -> Surreal:
        instance = cls.__new__(cls)
        instance._hash = None
        instance.terms = terms
        return instance

    @classmethod
    def monomial(
        cls,
        coeff: int | Fraction | ExactReal = 1,
        exponent: int | Fraction | Surreal = 0,
        atom: Surreal | None = None,
    ) -> Surreal:
        """Return ``coeff * exp(atom) * w^exponent``."""
        coeff = ExactReal(coeff)
        if coeff.is_zero():
            return ZERO
        atom = ZERO if atom is None else atom
        if any(term.exponent.sign() <= 0 or term.atom for term in atom.terms):
            raise UnsupportedClass("exp(%s) is not an exponential atom" % atom)
        return cls._from_terms((Term(coeff, Surreal.coerce(exponent), atom),))

    @classmethod
    def coerce(cls, value) -> Surreal:
        if isinstance(value, Surreal):
            return value
        return cls(value)

    @classmethod
    def from_ordinal(cls, ordinal: Ordinal) -> Surreal:
        return cls._from_terms(
            tuple(
                Term(ExactReal(count), cls.from_ordinal(exponent), ZERO)
                for exponent, count in ordinal.terms
            )
        )

    # Structure

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sign(self) -> int:
        """Return -1, 0 or 1.

        Raises:
            InconclusiveComparison: The leading coefficient's sign couldn't be
                decided.
        """
        if not self.terms:
            return 0
        return self.terms[0].coeff.sign()

    def leading_term(self) -> Term:
        if not self.terms:
            raise DomainError("zero has no leading term")
        return self.terms[0]

    def has_atoms(self) -> bool:
        return any(term.atom for term in self.terms)

    def is_real(self) -> bool:
        """Return whether the value is a real number."""
        return not self.terms or (
            len(self.terms) == 1
            and not self.terms[0].exponent
            and not self.terms[0].atom
        )

    def real_value(self) -> ExactReal | None:
        """Return the value as an `.ExactReal`, or ``None`` if not real."""
        if not self.is_real():
            return None
        return self.terms[0].coeff if self.terms else ExactReal(0)

    def as_fraction(self) -> Fraction | None:
        """Return the value as a `fractions.Fraction`, or ``None``."""
        value = self.real_value()
        return None if value is None else value.rational

    def is_finite(self) -> bool:
        """Return whether the value is bounded by some real number."""
        return not self._split()[0]

    def _split(self) -> tuple[tuple[Term, ...], tuple[Term, ...], tuple[Term, ...]]:
        infinite, real, infinitesimal = [], [], []
        for term in self.terms:
            if term.atom:
                (infinite if term.atom.sign() > 0 else infinitesimal).append(term)
            elif term.exponent.sign() > 0:
                infinite.append(term)
            elif term.exponent:
                infinitesimal.append(term)
            else:
                real.append(term)
        return tuple(infinite), tuple(real), tuple(infinitesimal)

    def infinite_part(self) -> Surreal:
        """Return the sum of the terms above every real number."""
        return Surreal._from_terms(self._split()[0])

    def standard_part(self) -> ExactReal:
        """Return the real number infinitely close to a finite value."""
        infinite, real, _ = self._split()
        if infinite:
            raise DomainError("%s is infinite" % self)
        return real[0].coeff if real else ExactReal(0)

    def infinitesimal_part(self) -> Surreal:
        return Surreal._from_terms(self._split()[2])

    def as_ordinal(self) -> Ordinal | None:
        """Return the value as an `.Ordinal`, or ``None`` if it isn't one."""
        terms = []
        for term in self.terms:
            count = term.coeff.rational
            if term.atom or count is None or count.denominator != 1 or count < 1:
                return None
            if term.exponent.sign() < 0:
                return None
            exponent = term.exponent.as_ordinal()
            if exponent is None:
                return None
            terms.append((exponent, int(count)))
        return Ordinal(terms)

    # Arithmetic

    def __add__(self, other):
        if not isinstance(other, (Surreal, int, Fraction, ExactReal)):
            return NotImplemented
        return surreal_add(self, Surreal.coerce(other))

    __radd__ = __add__

    def __neg__(self) -> Surreal:
        return surreal_neg(self)

    def __pos__(self) -> Surreal:
        return self

    def __sub__(self, other):
        if not isinstance(other, (Surreal, int, Fraction, ExactReal)):
            return NotImplemented
        return surreal_add(self, surreal_neg(Surreal.coerce(other)))

    def __rsub__(self, other):
        return Surreal.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Surreal, int, Fraction, ExactReal)):
            return NotImplemented
        return surreal_mul(self, Surreal.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (Surreal, int, Fraction, ExactReal)):
            return NotImplemented
        return self * Surreal.coerce(other).reciprocal()

    def __rtruediv__(self, other):
        return Surreal.coerce(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> Surreal:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.reciprocal() ** -exponent
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def reciprocal(self) -> Surreal:
        """Return ``1/self`` for a single-term value.

        Raises:
            UnsupportedClass: The value has more than one term; use
                `truncated_div` for a truncated quotient instead.
        """
        if not self.terms:
            raise ZeroDivisionError("division by zero")
        if len(self.terms) > 1:
            raise UnsupportedClass("division by the multi-term value %s" % self)
        (coeff, exponent, atom), = self.terms
        return Surreal._from_terms((Term(1 / coeff, -exponent, -atom),))

    def truncated_div(self, divisor: Surreal, order: int) -> Surreal:
        """Return the exact leading terms of ``self / divisor``.

        The divisor is written as ``lead * (1 + r)`` with ``r`` infinitesimal
        and ``1/(1 + r)`` is expanded to ``order`` powers of ``-r``.  Only the
        terms above the first neglected power of ``r`` are returned, so every
        returned term is a term of the true quotient.
        """
        if not divisor.terms:
            raise ZeroDivisionError("division by zero")
        lead = Surreal._from_terms(divisor.terms[:1])
        inverse = lead.reciprocal()
        if len(divisor.terms) == 1:
            return self * inverse
        ratio = Surreal._from_terms(divisor.terms[1:]) * inverse
        series = ZERO
        power = ONE
        for _ in range(order):
            series = series + power
            power = power * -ratio
        quotient = self * inverse * series
        cutoff = Surreal._from_terms(self.terms[:1]) * inverse * power
        if not cutoff:
            return quotient
        bound = Term(ExactReal(1), cutoff.terms[0].exponent, cutoff.terms[0].atom)
        return Surreal._from_terms(
            tuple(term for term in quotient.terms if compare_monomials(term, bound) > 0)
        )

    # Order and identity

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, ExactReal)):
            other = Surreal(other)
        if not isinstance(other, Surreal):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other) -> bool:
        if not isinstance(other, (Surreal, int, Fraction, ExactReal)):
            return NotImplemented
        return surreal_compare(self, Surreal.coerce(other)) is Ordering.LESS

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_real():
                self._hash = hash(self.real_value())
            else:
                self._hash = hash(self.terms)
        return self._hash

    # Conversion

    def to_sympy(self) -> sympy.Expr:
        """Return the value as a sympy expression in ``omega``."""
        total = sympy.S.Zero
        for coeff, exponent, atom in self.terms:
            factor = coeff.expr
            if exponent:
                factor *= OMEGA_SYMBOL ** exponent.to_sympy()
            if atom:
                factor *= sympy.exp(atom.to_sympy())
            total += factor
        return total

    @classmethod
    def from_sympy(cls, expr: sympy.Expr) -> Surreal:
        """Convert a sympy expression in ``omega`` to a normal form.

        Supported are Laurent polynomials in ``omega`` with surreal exponents,
        exponentials of values whose infinitesimal part vanishes, and
        quotients by monomials.

        Raises:
            UnsupportedClass: The expression has free variables, or a
                denominator with more than one term.
        """
        expr = sympy.sympify(expr)
        others = expr.free_symbols - {OMEGA_SYMBOL}
        if others:
            raise UnsupportedClass(
                "%s depends on %s" % (expr, ", ".join(sorted(map(str, others))))
            )
        if OMEGA_SYMBOL not in expr.free_symbols:
            try:
                return cls(ExactReal(expr))
            except ValueError as exc:
                raise UnsupportedClass(str(exc)) from exc
        total = ZERO
        for addend in sympy.Add.make_args(sympy.expand(expr)):
            product = ONE
            for factor in sympy.Mul.make_args(addend):
                product = product * _factor_from_sympy(factor)
            total = total + product
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for index, term in enumerate(self.terms):
            negative = term.coeff.sign() < 0
            text = _render_term(abs(term.coeff) if negative else term.coeff, term)
            if index == 0:
                parts.append("-" + text if negative else text)
            else:
                parts.append(("- " if negative else "+ ") + text)
        return " ".join(parts)

    def __repr__(self) -> str:
        return "Surreal(%s)" % self


def _factor_from_sympy(factor: sympy.Expr) -> Surreal:
    if OMEGA_SYMBOL not in factor.free_symbols:
        return Surreal.from_sympy(factor)
    if factor == OMEGA_SYMBOL:
        return OMEGA
    if isinstance(factor, sympy.exp):
        return _exp_from_sympy(factor.args[0])
    if factor.is_Pow:
        base, exponent = factor.base, factor.exp
        if base == OMEGA_SYMBOL:
            return Surreal.monomial(1, Surreal.from_sympy(exponent))
        if OMEGA_SYMBOL not in base.free_symbols:
            if not base.is_positive:
                raise UnsupportedClass("%s has a non-positive base" % factor)
            return _exp_from_sympy(exponent * sympy.log(base))
        if exponent.is_Integer:
            return Surreal.from_sympy(base) ** int(exponent)
    raise UnsupportedClass("%s has no finite normal form" % factor)


def _exp_from_sympy(argument: sympy.Expr) -> Surreal:
    value = Surreal.from_sympy(argument)
    infinite, real, infinitesimal = value._split()
    if infinitesimal:
        raise UnsupportedClass("exp(%s) has an infinitesimal argument part" % value)
    coeff = real[0].coeff.exp() if real else ExactReal(1)
    return Surreal.monomial(coeff, 0, Surreal._from_terms(infinite))


def _render_power(term: Term) -> str:
    parts = []
    if term.atom:
        parts.append("exp(%s)" % term.atom)
    exponent = term.exponent
    if exponent:
        text = str(exponent)
        if text == "1":
            parts.append("w")
        elif _SIMPLE_EXPONENT.match(text):
            parts.append("w^" + text)
        else:
            parts.append("w^(%s)" % text)
    return "*".join(parts)


def _render_term(magnitude: ExactReal, term: Term) -> str:
    power = _render_power(term)
    coeff = str(magnitude)
    if not power:
        return coeff
    if magnitude == 1:
        return power
    if not _SIMPLE_EXPONENT.match(coeff):
        coeff = "(%s)" % coeff
    return "%s*%s" % (coeff, power)


ZERO = Surreal._from_terms(())
ONE = Surreal(1)
OMEGA = Surreal.monomial(1, 1)


def surreal_normalize(raw_terms: Iterable) -> Surreal:
    """Return the normal form of a sum of terms.

    Each raw term is a ``(coeff, exponent)`` pair or a `Term`.  Equal
    monomials are merged, zero coefficients dropped and exponents sorted into
    strictly decreasing order.

    Raises:
        InconclusiveComparison: Two exponents couldn't be ordered.
    """
    terms = []
    for raw in raw_terms:
        if isinstance(raw, Term):
            coeff, exponent, atom = raw
        else:
            coeff, exponent = raw
            atom = ZERO
        terms.append(Term(ExactReal(coeff), Surreal.coerce(exponent), atom))
    terms.sort(key=_MONOMIAL_KEY, reverse=True)
    merged: list[Term] = []
    for term in terms:
        if merged and compare_monomials(merged[-1], term) == 0:
            merged[-1] = merged[-1]._replace(coeff=merged[-1].coeff + term.coeff)
        else:
            merged.append(term)
    return Surreal._from_terms(tuple(term for term in merged if not term.coeff.is_zero()))


def surreal_add(a: Surreal, b: Surreal) -> Surreal:
    """Return ``a + b`` by merging the two term lists."""
    if not a.terms:
        return b
    if not b.terms:
        return a
    merged = []
    left, right = a.terms, b.terms
    i = j = 0
    while i < len(left) and j < len(right):
        order = compare_monomials(left[i], right[j])
        if order > 0:
            merged.append(left[i])
            i += 1
        elif order < 0:
            merged.append(right[j])
            j += 1
        else:
            coeff = left[i].coeff + right[j].coeff
            if not coeff.is_zero():
                merged.append(left[i]._replace(coeff=coeff))
            i += 1
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return Surreal._from_terms(tuple(merged))


def surreal_neg(a: Surreal) -> Surreal:
    """Return ``-a``."""
    return Surreal._from_terms(tuple(term._replace(coeff=-term.coeff) for term in a.terms))


def surreal_mul(a: Surreal, b: Surreal) -> Surreal:
    """Return ``a * b``; exponents of ``w`` and of atoms add.

    Raises:
        UnsupportedClass: Both factors carry exponential atoms.
    """
    raw = []
    for x in a.terms:
        for y in b.terms:
            if x.atom and y.atom:
                raise UnsupportedClass("product of exponential atoms %s and %s" % (a, b))
            raw.append(Term(x.coeff * y.coeff, x.exponent + y.exponent, x.atom + y.atom))
    return surreal_normalize(raw)


def surreal_compare(a: Surreal, b: Surreal) -> Ordering:
    """Compare two normal forms by the sign of their difference.

    Raises:
        InconclusiveComparison: The sign of the leading coefficient of the
            difference couldn't be decided.
    """
    if a.terms == b.terms:
        return Ordering.EQUAL
    return Ordering.of(surreal_add(a, surreal_neg(b)).sign())


# Genetic forms


class Family(NamedTuple):
    """An indexed family of options standing for an infinite set.

    Only the members with index ``start, start + 1, ...`` exist; for a limit
    value the family is cofinal in the set it replaces.
    """

    rule: Callable[[int], Surreal]
    description: str
    start: int = 1

    def members(self, count: int) -> list[Surreal]:
        return [self.rule(index) for index in range(self.start, self.start + count)]


Family.rule.__doc__ = "Maps an index to the option with that index."
Family.description.__doc__ = "Human readable description of the rule."
Family.start.__doc__ = "The first valid index."

_FAMILY_SAMPLES = 8


@dataclasses.dataclass(frozen=True)
class GeneticForm:
    """A form ``{L | R}`` given by option sets and optional option families.

    Raises:
        IllFormed: Some left option is not less than some right option.
            Families are checked on their first few members.
    """

    left: frozenset[Surreal] = frozenset()
    right: frozenset[Surreal] = frozenset()
    left_family: Family | None = None
    right_family: Family | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "left", frozenset(map(Surreal.coerce, self.left)))
        object.__setattr__(self, "right", frozenset(map(Surreal.coerce, self.right)))
        lefts = self.left_options(_FAMILY_SAMPLES)
        rights = self.right_options(_FAMILY_SAMPLES)
        for low in lefts:
            for high in rights:
                if not low < high:
                    raise IllFormed("left option %s is not below right option %s" % (low, high))

    def left_options(self, samples: int = _FAMILY_SAMPLES) -> list[Surreal]:
        options = sorted(self.left)
        if self.left_family is not None:
            options.extend(self.left_family.members(samples))
        return options

    def right_options(self, samples: int = _FAMILY_SAMPLES) -> list[Surreal]:
        options = sorted(self.right)
        if self.right_family is not None:
            options.extend(self.right_family.members(samples))
        return options

    def negated(self) -> GeneticForm:
        """Return ``{-R | -L}``."""
        return GeneticForm(
            frozenset(-x for x in self.right),
            frozenset(-x for x in self.left),
            _negate_family(self.right_family),
            _negate_family(self.left_family),
        )

    def value(self) -> Surreal:
        """Return the simplest number between the options.

        Raises:
            UnsupportedClass: The form has an option family.
        """
        if self.left_family is not None or self.right_family is not None:
            raise UnsupportedClass("the value of a form with option families")
        return simplest_between(self.left, self.right)

    def __str__(self) -> str:
        left = _render_options(self.left, self.left_family)
        right = _render_options(self.right, self.right_family)
        return "{%s|%s}" % (left + " " if left else "", " " + right if right else "")


def _negate_family(family: Family | None) -> Family | None:
    if family is None:
        return None
    rule = family.rule
    return Family(lambda n: -rule(n), "-(%s)" % family.description, family.start)


def _render_options(options: frozenset[Surreal], family: Family | None) -> str:
    parts = [str(x) for x in sorted(options)]
    if family is not None:
        parts.extend(str(x) for x in family.members(3))
        parts.append("...")
    return ", ".join(parts)


# The recursive Conway oracle works on dyadic rationals through their
# canonical forms; every memo table is an lru_cache and safe across threads.


@functools.lru_cache(maxsize=None)
def _canonical(x: Fraction) -> tuple[Fraction | None, Fraction | None]:
    signs = sign_expansion(x)
    prefixes = [from_sign_expansion(signs[:k]) for k in range(len(signs))]
    below = [p for p in prefixes if p < x]
    above = [p for p in prefixes if p > x]
    return (max(below) if below else None, min(above) if above else None)


@functools.lru_cache(maxsize=None)
def _oracle_le(x: Fraction, y: Fraction) -> bool:
    # x <= y iff no left option of x is >= y and no right option of y is <= x.
    x_left, _ = _canonical(x)
    _, y_right = _canonical(y)
    if x_left is not None and _oracle_le(y, x_left):
        return False
    if y_right is not None and _oracle_le(y_right, x):
        return False
    return True


def _oracle_value(left: Iterable[Fraction], right: Iterable[Fraction]) -> Fraction:
    left, right = list(left), list(right)
    return _simplest_rational(max(left) if left else None, min(right) if right else None)


@functools.lru_cache(maxsize=None)
def _oracle_add(x: Fraction, y: Fraction) -> Fraction:
    x_left, x_right = _canonical(x)
    y_left, y_right = _canonical(y)
    left = [_oracle_add(x_left, y)] if x_left is not None else []
    left += [_oracle_add(x, y_left)] if y_left is not None else []
    right = [_oracle_add(x_right, y)] if x_right is not None else []
    right += [_oracle_add(x, y_right)] if y_right is not None else []
    return _oracle_value(left, right)


@functools.lru_cache(maxsize=None)
def _oracle_mul(x: Fraction, y: Fraction) -> Fraction:
    x_left, x_right = _canonical(x)
    y_left, y_right = _canonical(y)

    def option(xo: Fraction | None, yo: Fraction | None) -> list[Fraction]:
        if xo is None or yo is None:
            return []
        return [_oracle_mul(xo, y) + _oracle_mul(x, yo) - _oracle_mul(xo, yo)]

    left = option(x_left, y_left) + option(x_right, y_right)
    right = option(x_left, y_right) + option(x_right, y_left)
    return _oracle_value(left, right)


def _oracle_options(form: GeneticForm, bound: int) -> tuple[list[Fraction], list[Fraction]]:
    if form.left_family is not None or form.right_family is not None:
        raise UnsupportedClass("the oracle only accepts finite forms")
    sides = []
    for options in (form.left, form.right):
        values = []
        for option in options:
            value = option.as_fraction()
            if value is None or not is_dyadic(value):
                raise UnsupportedClass("oracle option %s is not dyadic" % option)
            if len(sign_expansion(value)) > bound:
                raise DepthExceeded(
                    "option %s is born after day %d" % (option, bound)
                )
            values.append(value)
        sides.append(values)
    return sides[0], sides[1]


def conway_arith_oracle(
    a: GeneticForm,
    b: GeneticForm | None = None,
    op: str = "add",
    birthday_bound: int = 8,
) -> GeneticForm | Ordering:
    """Apply Conway's recursive definitions literally.

    ``op`` is one of ``"add"``, ``"mul"``, ``"neg"`` (of ``a``) and
    ``"compare"``.  Arithmetic returns the form built from the options of the
    operands, whose `GeneticForm.value` is the result; ``"compare"`` returns
    an `.Ordering`.  Options of options recurse through the canonical forms
    of dyadic rationals.  Products of option values are computed by the
    recursion and combined with exact dyadic sums.

    Raises:
        DepthExceeded: An option is born after day ``birthday_bound``.
        UnsupportedClass: An option is not a dyadic rational.
    """
    a_left, a_right = _oracle_options(a, birthday_bound)
    _LOGGER.debug("conway oracle %s on %s and %s", op, a, b)
    x = _oracle_value(a_left, a_right)
    if op == "neg":
        return GeneticForm(frozenset(Surreal(-v) for v in a_right), frozenset(Surreal(-v) for v in a_left))
    if b is None:
        raise ValueError("%s needs two operands" % op)
    b_left, b_right = _oracle_options(b, birthday_bound)
    y = _oracle_value(b_left, b_right)
    if op == "compare":
        x_le_y = not any(_oracle_le(y, v) for v in a_left) and not any(
            _oracle_le(v, x) for v in b_right
        )
        y_le_x = not any(_oracle_le(x, v) for v in b_left) and not any(
            _oracle_le(v, y) for v in a_right
        )
        if x_le_y and y_le_x:
            return Ordering.EQUAL
        return Ordering.LESS if x_le_y else Ordering.GREATER
    if op == "add":
        left = [_oracle_add(v, y) for v in a_left] + [_oracle_add(x, v) for v in b_left]
        right = [_oracle_add(v, y) for v in a_right] + [_oracle_add(x, v) for v in b_right]
    elif op == "mul":

        def option(xo: Fraction, yo: Fraction) -> Fraction:
            return _oracle_mul(xo, y) + _oracle_mul(x, yo) - _oracle_mul(xo, yo)

        left = [option(p, q) for p in a_left for q in b_left]
        left += [option(p, q) for p in a_right for q in b_right]
        right = [option(p, q) for p in a_left for q in b_right]
        right += [option(p, q) for p in a_right for q in b_left]
    else:
        raise ValueError("unknown oracle operation %r" % op)
    return GeneticForm(frozenset(map(Surreal, left)), frozenset(map(Surreal, right)))


# Simplicity


def _first_dyadic_above(low: Fraction, closed: bool, scale: int) -> Fraction:
    scaled = low * scale
    numerator = math.ceil(scaled) if closed else math.floor(scaled) + 1
    return Fraction(numerator, scale)


def _simplest_rational(
    low: Fraction | None,
    high: Fraction | None,
    low_closed: bool = False,
    high_closed: bool = False,
) -> Fraction:
    """Return the simplest dyadic rational in an interval of the real line."""

    def inside_high(value: Fraction) -> bool:
        return high is None or value < high or (high_closed and value == high)

    def inside_low(value: Fraction) -> bool:
        return low is None or value > low or (low_closed and value == low)

    if inside_low(Fraction(0)) and inside_high(Fraction(0)):
        return Fraction(0)
    if low is None or (high is not None and high <= 0):
        return -_simplest_rational(
            None if high is None else -high,
            None if low is None else -low,
            high_closed,
            low_closed,
        )
    scale = 1
    while True:
        candidate = _first_dyadic_above(low, low_closed, scale)
        if inside_high(candidate):
            return candidate
        scale *= 2


def _floor(value: ExactReal) -> int:
    if value.rational is not None:
        return math.floor(value.rational)
    width = Fraction(1, 4)
    while width > Fraction(1, 2**64):
        low, high = value.refine(width)
        if math.floor(low) == math.floor(high):
            return math.floor(low)
        width /= 16
    raise InconclusiveComparison("cannot decide the integer part of %s" % value)


def _least_ordinal_above(x: Surreal) -> Ordinal:
    # Walk the terms: ordinal-shaped leading terms are kept, the first term
    # that isn't decides the increment.
    ordinal = Ordinal()
    terms = x.terms
    for index, term in enumerate(terms):
        if term.atom:
            raise UnsupportedClass("ordinal bounds of %s" % x)
        rest = Surreal._from_terms(terms[index + 1:])
        sign = term.coeff.sign()
        exponent_sign = term.exponent.sign()
        if exponent_sign > 0:
            exponent = term.exponent.as_ordinal()
            if sign < 0:
                return ordinal
            if exponent is None:
                return ordinal + Ordinal.omega(_least_ordinal_above(term.exponent))
            count = term.coeff.rational
            if count is not None and count.denominator == 1:
                ordinal = ordinal + Ordinal.omega(exponent) * int(count)
                continue
            return ordinal + Ordinal.omega(exponent) * (_floor(term.coeff) + 1)
        if exponent_sign == 0:
            floor = _floor(term.coeff)
            exact = term.coeff == floor
            if exact and rest.sign() < 0:
                step = floor
            else:
                step = floor + 1
            return ordinal + max(step, 0)
        return ordinal + 1 if sign > 0 else ordinal
    return ordinal + 1


def simplest_between(left: Iterable, right: Iterable) -> Surreal:
    """Return the simplest number between two sets, per the simplicity theorem.

    With ``right`` empty the result is the simplest number above every left
    element, dually for ``left`` empty, and zero when both are empty.

    Supported are dyadic and rational endpoints, ordinals and the numbers
    infinitely close to them, and intervals bracketed by consecutive ordinals
    or sharing an ordinal infinite part.

    Raises:
        IllFormed: Some element of ``left`` is not below some element of
            ``right``.
        UnsupportedClass: The interval is outside the supported class.

    Example:
        >>> simplest_between([Fraction(1, 4)], [Fraction(3, 8)])
        Surreal(5/16)
    """
    left = [Surreal.coerce(v) for v in left]
    right = [Surreal.coerce(v) for v in right]
    for low in left:
        for high in right:
            if not low < high:
                raise IllFormed("%s is not below %s" % (low, high))
    return _simplest(max(left) if left else None, min(right) if right else None)


def _simplest(low: Surreal | None, high: Surreal | None) -> Surreal:
    if (low is None or low.sign() < 0) and (high is None or high.sign() > 0):
        return ZERO
    if low is None or (high is not None and high.sign() <= 0):
        return -_simplest(None if high is None else -high, None if low is None else -low)
    candidate = Surreal.from_ordinal(_least_ordinal_above(low))
    if high is None or candidate < high:
        return candidate
    low_value, high_value = low.as_fraction(), high.as_fraction()
    if low_value is not None and high_value is not None:
        return Surreal(_simplest_rational(low_value, high_value))
    if low.is_finite() and high.is_finite():
        return _simplest_near_reals(low, high)
    infinite = low.infinite_part()
    if infinite == high.infinite_part() and infinite.as_ordinal() is not None:
        return infinite + _simplest(low - infinite, high - infinite)
    raise UnsupportedClass("the simplest number between %s and %s" % (low, high))


def _simplest_near_reals(low: Surreal, high: Surreal) -> Surreal:
    low_real = low.standard_part().rational
    high_real = high.standard_part().rational
    if low_real is None or high_real is None:
        raise UnsupportedClass("the simplest number between %s and %s" % (low, high))
    low_closed = low < Surreal(low_real)
    high_closed = high > Surreal(high_real)
    if low_real == high_real:
        if low_closed and high_closed:
            return Surreal(low_real)
        raise UnsupportedClass(
            "the simplest number between %s and %s" % (low, high)
        )
    return Surreal(_simplest_rational(low_real, high_real, low_closed, high_closed))


# Birthdays


def birthday(x: Surreal) -> Ordinal:
    """Return the ordinal on which ``x`` is born.

    Dyadic rationals are born on the day given by the length of their sign
    expansion, all other reals on day ``w``.  Finite normal forms with dyadic
    coefficients and exponents that are ordinals or negative integers are
    handled by concatenating the sign expansions of their terms.

    Raises:
        UnsupportedClass: ``x`` is outside that class.
    """
    x = Surreal.coerce(x)
    if x.is_real():
        value = x.real_value()
        if value.rational is not None and is_dyadic(value.rational):
            return Ordinal.finite(len(sign_expansion(value.rational)))
        return Ordinal.omega()
    runs: list[list] = []
    previous_depth = None
    for term in x.terms:
        coeff = term.coeff.rational
        if term.atom or coeff is None or not is_dyadic(coeff):
            raise UnsupportedClass("the birthday of %s" % x)
        exponent = term.exponent.as_ordinal() if term.exponent.sign() >= 0 else None
        if exponent is not None:
            block = [("+", Ordinal.omega(exponent))]
            repeat = Ordinal.omega(exponent)
        else:
            depth = term.exponent.as_fraction()
            if depth is None or depth.denominator != 1:
                raise UnsupportedClass("the birthday of %s" % x)
            depth = -int(depth)
            relative = depth - previous_depth if previous_depth is not None else depth
            previous_depth = depth
            block = [("+", Ordinal.finite(1)), ("-", Ordinal.omega() * relative)]
            repeat = Ordinal.finite(1)
        block += [(sign, repeat) for sign in sign_expansion(abs(coeff))[1:]]
        if coeff < 0:
            block = [("-" if sign == "+" else "+", length) for sign, length in block]
        for sign, length in block:
            if runs and runs[-1][0] == sign:
                runs[-1][1] = runs[-1][1] + length
            else:
                runs.append([sign, length])
    total = Ordinal()
    for _, length in runs:
        total = total + length
    return total


def to_genetic(x) -> GeneticForm:
    """Return the canonical genetic form of ``x``.

    Dyadic rationals get their parents in the birth order as options,
    non-dyadic rationals the families of dyadic approximations from below and
    above, successor ordinals ``{n - 1 |}``, limit ordinals the family of
    their canonical cofinal sequence, ``w`` plus a dyadic the corresponding
    prefixes, and ``1/w`` the form ``{0 | 2^-n}``.

    Raises:
        UnsupportedClass: ``x`` is outside that class.
    """
    x = Surreal.coerce(x)
    if x.sign() < 0:
        return to_genetic(-x).negated()
    value = x.as_fraction()
    if value is not None:
        if is_dyadic(value):
            below, above = _canonical(value)
            return GeneticForm(
                frozenset() if below is None else frozenset({Surreal(below)}),
                frozenset() if above is None else frozenset({Surreal(above)}),
            )
        return GeneticForm(
            left_family=Family(
                lambda n: Surreal(Fraction(math.floor(value * 2**n), 2**n)),
                "floor(%s*2^n)/2^n" % value,
                0,
            ),
            right_family=Family(
                lambda n: Surreal(Fraction(math.ceil(value * 2**n), 2**n)),
                "ceil(%s*2^n)/2^n" % value,
                0,
            ),
        )
    ordinal = x.as_ordinal()
    if ordinal is not None:
        if ordinal.is_successor():
            return GeneticForm(frozenset({Surreal(ordinal.predecessor())}))
        return GeneticForm(
            left_family=Family(
                lambda n: Surreal(ordinal.cofinal(n)), "cofinal(%s, n)" % ordinal
            )
        )
    if x == Surreal.monomial(1, -1):
        return GeneticForm(
            frozenset({ZERO}),
            right_family=Family(lambda n: Surreal(Fraction(1, 2**n)), "2^-n", 0),
        )
    infinite = x.infinite_part()
    limit = infinite.as_ordinal()
    offset = (x - infinite).as_fraction()
    if limit is not None and offset is not None and is_dyadic(offset):
        signs = sign_expansion(offset)
        prefixes = [infinite + from_sign_expansion(signs[:k]) for k in range(len(signs))]
        below = [p for p in prefixes if p < x]
        above = [p for p in prefixes if p > x]
        left_family = None
        if not below:
            left_family = Family(
                lambda n: Surreal(limit.cofinal(n)), "cofinal(%s, n)" % limit
            )
        return GeneticForm(
            frozenset({max(below)}) if below else frozenset(),
            frozenset({min(above)}) if above else frozenset(),
            left_family,
        )
    raise UnsupportedClass("a canonical genetic form of %s" % x)
