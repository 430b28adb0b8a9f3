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

"""Dedekind sections of the surreal line.

Gaps are proper classes, so a `DedekindSection` is never materialized.  It is
described by normal-form data and decides membership with `DedekindSection.side`:

* ``NUMBER``: the section ``{No_<x | No_>=x}`` of a number ``x``.
* ``CUT``: the pseudo-gaps ``{No_<x | No_>=x}`` and ``{No_<=x | No_>x}``,
  which the restricted gap definition identifies with ``x``.
* ``TYPE_I``: an On-length sum ``sum_{i in On} r_i * w^y_i`` given by a
  `SurrealStream`.
* ``TYPE_II``: a finite prefix followed by ``+-w^Theta`` for a section
  ``Theta`` whose right class contains every prefix exponent.  `ON` and
  `OFF` are the two ends of the line.
"""

from __future__ import annotations

import dataclasses
import enum
import logging

import sympy

from .config import DEFAULT_SETTINGS, Settings
from .errors import (
    IllFormed,
    NotInClass,
    UndecidableAsymptotics,
    WitnessExhausted,
)
from .foundations import ExactReal, Ordinal, render_expr
from .expr import ALPHA, I
from .surreal import OMEGA_SYMBOL, ZERO, Surreal, Term, compare_monomials

__all__ = [
    "SurrealStream",
    "SectionKind",
    "GapKind",
    "DedekindSection",
    "ON",
    "OFF",
    "INFTY",
    "validate_section",
    "classify_gap",
    "gap_plus_number",
    "omega_power_gap",
]

_LOGGER = logging.getLogger(__name__)

_SAMPLED_TERMS = 8


@dataclasses.dataclass(frozen=True)
class SurrealStream:
    """A transfinite sum ``head + sum_{i >= start} coeff(i) * w^exponent(i)``.

    Attributes:
        coeff: Closed form of the ``i``-th coefficient, an expression in `I`.
        exponent: Closed form of the ``i``-th exponent, an expression in `I`.
        bound: Length of the sum as an `.Ordinal`, or ``None`` for On.
        start: The first index of the rule.
        head: Finitely many leading terms that precede the rule.

    Raises:
        IllFormed: Sampled exponents do not strictly decrease, or a sampled
            coefficient is zero.
    """

    coeff: sympy.Expr
    exponent: sympy.Expr
    bound: Ordinal | None = None
    start: int = 0
    head: Surreal = ZERO

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", sympy.sympify(self.coeff))
        object.__setattr__(self, "exponent", sympy.sympify(self.exponent))
        terms = self.rule_terms(_SAMPLED_TERMS)
        for index, term in enumerate(terms):
            if term.coeff.is_zero():
                raise IllFormed("coefficient %d of %s is zero" % (self.start + index, self))
            if index and compare_monomials(terms[index - 1], term) <= 0:
                raise IllFormed("exponents of %s do not decrease" % self)
        if self.head and terms and compare_monomials(self.head.terms[-1], terms[0]) <= 0:
            raise IllFormed("the head of %s does not precede its rule" % self)

    @classmethod
    def from_term(cls, term, bound: Ordinal | None = None, start: int = 0) -> SurrealStream:
        """Split a term rule ``c(i) * w^e(i)`` into coefficient and exponent."""
        coeff, exponent = [], sympy.S.Zero
        for factor in sympy.Mul.make_args(sympy.sympify(term)):
            base, power = factor.as_base_exp()
            if base == OMEGA_SYMBOL:
                exponent += power
            else:
                coeff.append(factor)
        return cls(sympy.Mul(*coeff), exponent, bound, start)

    def term(self, index: int) -> Term:
        """Return the rule's term with the given index."""
        coeff = ExactReal(self.coeff.subs(I, index))
        exponent = Surreal.from_sympy(self.exponent.subs(I, index))
        return Term(coeff, exponent, ZERO)

    def rule_terms(self, count: int) -> list[Term]:
        stop = self.start + count
        if self.bound is not None and self.bound.is_finite():
            stop = min(stop, int(self.bound))
        return [self.term(index) for index in range(self.start, stop)]

    def partial_sum(self, count: int) -> Surreal:
        """Return the head plus the first ``count`` terms of the rule."""
        return self.head + Surreal._from_terms(tuple(self.rule_terms(count)))

    def negated(self) -> SurrealStream:
        return dataclasses.replace(self, coeff=-self.coeff, head=-self.head)

    def rule_text(self) -> str:
        return "(%s) * w^(%s)" % (render_expr(self.coeff), render_expr(self.exponent))

    def render(self, count: int) -> str:
        """Return the first ``count`` terms followed by the index rule."""
        shown = self.partial_sum(count)
        return "%s + ... [i-th term: %s, i >= %d]" % (shown, self.rule_text(), self.start)

    def __str__(self) -> str:
        bound = "On" if self.bound is None else str(self.bound)
        index = "i<%s" % bound if not self.start else "%d<=i<%s" % (self.start, bound)
        text = "sum_{%s} %s" % (index, self.rule_text())
        return "%s + %s" % (self.head, text) if self.head else text


class SectionKind(enum.Enum):
    NUMBER = "number"
    CUT = "cut"
    TYPE_I = "type-i"
    TYPE_II = "type-ii"


class GapKind(enum.Enum):
    """Classification of a validated section."""

    NOT_A_GAP = "not-a-gap"
    TYPE_IA = "type-ia"
    TYPE_IB = "type-ib"
    TYPE_II = "type-ii"


@dataclasses.dataclass(frozen=True)
class DedekindSection:
    """A Dedekind section of the surreal line, described intensionally.

    Build sections with the named constructors rather than directly.
    ``theta is None`` on a ``TYPE_II`` section marks one of the two ends of
    the line, `ON` or `OFF`, distinguished by ``sign``.
    """

    kind: SectionKind
    number: Surreal | None = None
    stream: SurrealStream | None = None
    prefix: Surreal = ZERO
    sign: int = 1
    theta: DedekindSection | None = None
    upper: bool = False

    @classmethod
    def of_number(cls, value) -> DedekindSection:
        return cls(SectionKind.NUMBER, number=Surreal.coerce(value))

    @classmethod
    def cut(cls, value, side: str) -> DedekindSection:
        """Return ``{No_<x | No_>=x}`` for side ``"-"``, ``{No_<=x | No_>x}`` for ``"+"``."""
        if side not in ("-", "+"):
            raise ValueError("side must be '-' or '+'")
        return cls(SectionKind.CUT, number=Surreal.coerce(value), upper=side == "+")

    @classmethod
    def type_one(cls, stream: SurrealStream) -> DedekindSection:
        return cls(SectionKind.TYPE_I, stream=stream)

    @classmethod
    def type_two(cls, prefix, sign: int, theta: DedekindSection) -> DedekindSection:
        """Return ``prefix + sign * w^theta``."""
        if sign not in (1, -1):
            raise ValueError("sign must be 1 or -1")
        return cls(SectionKind.TYPE_II, prefix=Surreal.coerce(prefix), sign=sign, theta=theta)

    def is_end(self) -> bool:
        return self.kind is SectionKind.TYPE_II and self.theta is None

    def is_gap(self) -> bool:
        return self.kind in (SectionKind.TYPE_I, SectionKind.TYPE_II)

    def side(self, x, settings: Settings = DEFAULT_SETTINGS) -> int:
        """Return -1 if ``x`` is in the left class and 1 if in the right one.

        For a ``NUMBER`` section, 0 means ``x`` is the number itself.

        Raises:
            WitnessExhausted: A Type I sum needed more than
                ``settings.witness_budget`` terms to separate ``x`` from it.
        """
        x = Surreal.coerce(x)
        if self.kind is SectionKind.NUMBER:
            return (x > self.number) - (x < self.number)
        if self.kind is SectionKind.CUT:
            if x == self.number:
                return -1 if self.upper else 1
            return -1 if x < self.number else 1
        if self.kind is SectionKind.TYPE_I:
            return self._stream_side(x, settings)
        if self.theta is None:
            return -self.sign
        difference = x - self.prefix
        if not difference:
            return -self.sign
        lead = difference.leading_term()
        if lead.atom:
            return difference.sign()
        if difference.sign() != self.sign:
            return difference.sign()
        smaller = self.theta.side(lead.exponent, settings) < 0
        if self.sign > 0:
            return -1 if smaller else 1
        return 1 if smaller else -1

    def _stream_side(self, x: Surreal, settings: Settings) -> int:
        stream = self.stream
        partial = stream.head
        for index in range(stream.start, stream.start + settings.witness_budget):
            term = stream.term(index)
            difference = x - partial
            if not difference:
                return -1 if term.coeff.sign() > 0 else 1
            if compare_monomials(difference.leading_term(), term) > 0:
                return difference.sign()
            partial = partial + Surreal._from_terms((term,))
        raise WitnessExhausted(
            "%s is within %d terms of %s" % (x, settings.witness_budget, self)
        )

    def negated(self) -> DedekindSection:
        """Return the mirror image ``-s`` of the section."""
        if self.kind is SectionKind.NUMBER:
            return DedekindSection.of_number(-self.number)
        if self.kind is SectionKind.CUT:
            return DedekindSection(SectionKind.CUT, number=-self.number, upper=not self.upper)
        if self.kind is SectionKind.TYPE_I:
            return DedekindSection.type_one(self.stream.negated())
        return dataclasses.replace(self, prefix=-self.prefix, sign=-self.sign)

    def __neg__(self) -> DedekindSection:
        return self.negated()

    def __str__(self) -> str:
        if self.kind is SectionKind.NUMBER:
            return str(self.number)
        if self.kind is SectionKind.CUT:
            return "cut(%s%s)" % (self.number, "+" if self.upper else "-")
        if self.kind is SectionKind.TYPE_I:
            return "gap{ %s }" % self.stream
        if self.theta is None:
            return "ON" if self.sign > 0 else "OFF"
        if self == INFTY:
            return "INFTY"
        if self == -INFTY:
            return "-INFTY"
        power = "w^Theta{%s}" % self.theta
        if not self.prefix:
            return "gap{ %s%s }" % ("" if self.sign > 0 else "-", power)
        return "gap{ %s %s %s }" % (self.prefix, "+" if self.sign > 0 else "-", power)


ON = DedekindSection(SectionKind.TYPE_II, sign=1)
OFF = DedekindSection(SectionKind.TYPE_II, sign=-1)
INFTY = DedekindSection.type_two(ZERO, 1, DedekindSection.cut(0, "+"))


def validate_section(section: DedekindSection) -> DedekindSection:
    """Return ``section`` in the form the restricted gap definition allows.

    Genuine gaps and numbers are returned unchanged.  Pseudo-gaps, the
    sections ``{No_<x | No_>=x}`` and ``{No_<=x | No_>x}``, are equal to ``x``
    and come back as numbers; so do Type II sections whose ``w^Theta`` is a
    number or the pseudo-gap ``w^OFF``.

    Raises:
        IllFormed: The classes of the section overlap, which happens when a
            stream does not decrease or a prefix exponent lies in the left
            class of ``Theta``.
    """
    kind = section.kind
    if kind is SectionKind.NUMBER:
        return section
    if kind is SectionKind.CUT:
        return DedekindSection.of_number(section.number)
    if kind is SectionKind.TYPE_I:
        if section.stream.bound is not None:
            if section.stream.bound.is_finite():
                return DedekindSection.of_number(
                    section.stream.partial_sum(int(section.stream.bound))
                )
            raise IllFormed("%s has a set-length stream" % section)
        return section
    if section.theta is None:
        return section
    theta = section.theta
    if theta.is_end():
        if theta.sign > 0:
            return ON if section.sign > 0 else OFF
        # w^OFF lies just above zero, so the prefix absorbs it.
        return DedekindSection.of_number(section.prefix)
    if theta.kind is SectionKind.NUMBER:
        return DedekindSection.of_number(
            section.prefix + Surreal.monomial(section.sign, theta.number)
        )
    for term in section.prefix.terms:
        if term.atom:
            continue
        if theta.side(term.exponent) < 0:
            raise IllFormed(
                "prefix exponent %s is not above %s" % (term.exponent, theta)
            )
    return section


def classify_gap(section: DedekindSection) -> GapKind:
    """Return the `GapKind` of a validated section.

    A Type I sum is of type Ia exactly when its exponents tend to `OFF`; the
    limit is taken by `.seq_limit` on the closed-form exponent rule.

    Raises:
        UndecidableAsymptotics: The exponent rule is outside the closed-form
            class of the limit engine.
    """
    # limits builds on this module, so it is imported here.
    from .limits import seq_limit

    if not section.is_gap():
        return GapKind.NOT_A_GAP
    if section.kind is SectionKind.TYPE_II:
        return GapKind.TYPE_II
    exponent = section.stream.exponent.subs(I, ALPHA)
    try:
        result = seq_limit(exponent)
    except NotInClass as exc:
        raise UndecidableAsymptotics(
            "cannot decide the limit of the exponents %s" % section.stream.exponent
        ) from exc
    _LOGGER.debug("exponents of %s tend to %s", section, result)
    if result.section is not None and result.section == OFF:
        return GapKind.TYPE_IA
    return GapKind.TYPE_IB


def gap_plus_number(
    n, gap: DedekindSection, settings: Settings = DEFAULT_SETTINGS
) -> DedekindSection:
    """Return the translate ``n + g = {n + g^L | n + g^R}``.

    Terms of ``n`` that are infinitesimal relative to every term of the gap
    are absorbed; the others merge into the leading terms.

    Raises:
        WitnessExhausted: A term of ``n`` couldn't be placed among the first
            ``settings.witness_budget`` terms of a Type I stream.
    """
    n = Surreal.coerce(n)
    if not n:
        return gap
    kind = gap.kind
    if kind is SectionKind.NUMBER:
        return DedekindSection.of_number(gap.number + n)
    if kind is SectionKind.CUT:
        return dataclasses.replace(gap, number=gap.number + n)
    if gap.is_end():
        return gap
    if kind is SectionKind.TYPE_II:
        total = gap.prefix + n
        kept = tuple(
            term
            for term in total.terms
            if term.atom or gap.theta.side(term.exponent, settings) > 0
        )
        return dataclasses.replace(gap, prefix=Surreal._from_terms(kept))
    return DedekindSection.type_one(_merge_into_stream(n, gap.stream, settings))


def _merge_into_stream(n: Surreal, stream: SurrealStream, settings: Settings) -> SurrealStream:
    # Materialize rule terms until every placed term of n is above the rest.
    stop = stream.start
    absorbed = []
    for term in n.terms:
        index = stream.start
        limit = stream.start + settings.witness_budget
        while index < limit and compare_monomials(stream.term(index), term) >= 0:
            index += 1
        if index == limit:
            if _below_every_exponent(term, stream):
                absorbed.append(term)
                continue
            raise WitnessExhausted("cannot place %s in %s" % (term.exponent, stream))
        stop = max(stop, index)
    kept = Surreal._from_terms(tuple(t for t in n.terms if t not in absorbed))
    head = stream.head + Surreal._from_terms(
        tuple(stream.term(index) for index in range(stream.start, stop))
    )
    return dataclasses.replace(stream, head=head + kept, start=stop)


def _below_every_exponent(term: Term, stream: SurrealStream) -> bool:
    from .limits import seq_limit

    result = seq_limit(stream.exponent.subs(I, ALPHA))
    if result.value is not None:
        return term.exponent <= result.value
    return False


def omega_power_gap(theta: DedekindSection) -> DedekindSection:
    """Return the section ``w^Theta = {0, a*w^l | b*w^r}``.

    ``l`` and ``r`` range over the left and right classes of ``theta`` and
    ``a``, ``b`` over the positive reals.  Membership is decided through
    ``theta``'s own predicate on the leading exponent of the argument.
    """
    return validate_section(DedekindSection.type_two(ZERO, 1, theta))
