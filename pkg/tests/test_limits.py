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
from fractions import Fraction

import pytest
import sympy

from surreal_calc.errors import DomainError, EssentialSingularity, NotInClass, UnsupportedClass
from surreal_calc.expr import ALPHA, I, OMEGA, X
from surreal_calc.foundations import Ordinal
from surreal_calc.gaps import INFTY, OFF, ON, SurrealStream
from surreal_calc.limits import (
    Approach,
    CauchyKind,
    LimitKind,
    classify_cauchy,
    derivative,
    expand_asymptotic,
    fn_limit,
    is_weakly_continuous,
    seq_limit,
    seq_limit_oracle,
)
from surreal_calc.surreal import Surreal


def _is_zero(expr):
    return sympy.simplify(expr) == 0


# Expansions


def test_expand_at_on():
    # WHEN
    series = expand_asymptotic(ALPHA / (ALPHA + 1))

    # THEN
    assert [power for _, power in series.terms] == [0, 1, 2, 3]
    assert series.coefficient(1) == -1
    assert series.coefficient(2) == 1
    assert series.order == 4
    assert not series.exponentially_small
    with pytest.raises(ValueError):
        series.coefficient(5)


def test_expand_drops_exponentially_small_factors():
    series = expand_asymptotic(1 + 2**-ALPHA)
    assert series.terms == ((1, 0),)
    assert series.exponentially_small


def test_expand_at_a_number_from_the_right():
    series = expand_asymptotic(sympy.exp(X), Approach(X, Surreal(0), 1))
    assert series.coefficient(2) == sympy.Rational(1, 2)
    assert series.extend().order == 8


# Sequences


@pytest.mark.parametrize(
    "sequence, expected",
    [
        (2 - 2**-ALPHA, Surreal(2)),
        (1 / ALPHA, Surreal(0)),
        ((3 * ALPHA + 1) / (ALPHA + 2), Surreal(3)),
        (OMEGA + 1 / ALPHA, Surreal.from_sympy(OMEGA)),
    ],
)
def test_seq_limit_numbers(sequence, expected):
    result = seq_limit(sequence)
    assert result.kind is LimitKind.NUMBER
    assert result.value == expected


@pytest.mark.parametrize(
    "sequence, section",
    [(ALPHA, ON), (-ALPHA**2, OFF), (sympy.log(ALPHA), ON), (2**ALPHA, ON)],
)
def test_seq_limit_unbounded(sequence, section):
    result = seq_limit(sequence)
    assert result.kind is LimitKind.GAP
    assert result.section == section
    assert not result.formula_only


def test_seq_limit_oscillates():
    result = seq_limit((-1) ** ALPHA)
    assert result.kind is LimitKind.NO_LIMIT
    assert result.reason == "oscillatory"
    assert str(result) == "no limit (oscillatory)"


def test_seq_limit_with_small_base_is_conditional():
    # GIVEN a base known to lie strictly between -1 and 1
    result = seq_limit(X**ALPHA, small_bases=(X,))

    # THEN
    assert result.kind is LimitKind.NUMBER
    assert result.expr == 0
    assert result.conditions == ("-1 < x < 1",)


def test_seq_limit_outside_class():
    with pytest.raises(NotInClass):
        seq_limit(sympy.sin(ALPHA))


# The limit formula on finite prefixes


def test_oracle_agrees_with_engine():
    # GIVEN
    prefix = [1 - Fraction(1, 2**n) for n in range(12)]

    # WHEN
    oracle = seq_limit_oracle(prefix, 6)

    # THEN
    assert oracle.converges()
    assert oracle.simplest() == seq_limit(1 - 2**-ALPHA).value


def test_oracle_of_alternating_prefix_does_not_converge():
    oracle = seq_limit_oracle([(-1) ** n for n in range(12)], 6)
    assert not oracle.converges()
    assert all(value < -1 for value in oracle.left)
    assert all(value > 1 for value in oracle.right)


@pytest.mark.parametrize(
    "prefix, bound",
    [([Fraction(1, 3)], 6), ([1, 2], 11), ([], 6)],
)
def test_oracle_rejects_bad_input(prefix, bound):
    with pytest.raises(UnsupportedClass):
        seq_limit_oracle(prefix, bound)


# Cauchy sequences


def test_convergent_sequence_is_cauchy():
    result = classify_cauchy(1 - 2**-ALPHA)
    assert result.kind is CauchyKind.CONVERGES_TO
    assert str(result) == "ConvergesTo(1)"


@pytest.mark.parametrize(
    "sequence, reason",
    [(ALPHA, "unbounded"), (sympy.log(ALPHA), "unbounded"), ((-1) ** ALPHA, "oscillatory")],
)
def test_sequences_that_are_not_cauchy(sequence, reason):
    result = classify_cauchy(sequence)
    assert result.kind is CauchyKind.NOT_CAUCHY
    assert result.reason == reason


def test_partial_sums_approaching_type_ia_gap():
    result = classify_cauchy(SurrealStream(1, -I))
    assert result.kind is CauchyKind.APPROACHES_TYPE_IA
    assert str(result) == "ApproachesTypeIa(gap{ sum_{i<On} (1) * w^(-i) })"


def test_partial_sums_approaching_type_ib_gap():
    result = classify_cauchy(SurrealStream(1, 1 / (I + 1)))
    assert result.kind is CauchyKind.NOT_CAUCHY
    assert result.reason == "approaches a Type Ib gap"


def test_finite_partial_sums_converge():
    result = classify_cauchy(SurrealStream(1, -I, bound=Ordinal.finite(2)))
    assert result.kind is CauchyKind.CONVERGES_TO
    assert result.value == 1 + Surreal.from_sympy(1 / OMEGA)


# Functions


def test_fn_limit_at_a_number():
    assert str(fn_limit((sympy.exp(X) - 1) / X, 0)) == "1"
    assert str(fn_limit(X**2, Surreal.from_sympy(OMEGA))) == "w^2"


def test_fn_limit_one_sided():
    assert fn_limit(1 / X, 0, "right").section == ON
    assert fn_limit(1 / X, 0, "left").section == OFF
    result = fn_limit(1 / X, 0)
    assert result.kind is LimitKind.NO_LIMIT
    assert result.reason == "one-sided-limits-differ"


def test_fn_limit_essential_singularity():
    assert fn_limit(sympy.exp(1 / X), 0, "left").expr == 0
    with pytest.raises(EssentialSingularity):
        fn_limit(sympy.exp(1 / X), 0, "right")


def test_fn_limit_at_infinity():
    # WHEN
    unbounded = fn_limit(X, INFTY)
    beside_two = fn_limit(2 - 1 / X, INFTY)

    # THEN
    assert unbounded.section == INFTY
    assert unbounded.formula_only
    assert str(beside_two) == "gap{ 2 - w^Theta{cut(0-)} }"
    assert str(fn_limit(1 / X, INFTY)) == "gap{ w^Theta{cut(0-)} }"


def test_fn_limit_rejects_bad_sides():
    with pytest.raises(DomainError):
        fn_limit(X, INFTY, "right")
    with pytest.raises(DomainError):
        fn_limit(X, 0, "up")


def test_limit_laws():
    rng = random.Random(50)
    for _ in range(1000):
        a = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        f = rng.randint(-5, 5) * X ** rng.randint(0, 3) + rng.randint(-5, 5)
        g = rng.randint(1, 5) * sympy.exp(rng.randint(-2, 2) * X) + X
        lf = fn_limit(f, a).expr
        lg = fn_limit(g, a).expr
        assert _is_zero(fn_limit(f + g, a).expr - (lf + lg))
        assert _is_zero(fn_limit(f * g, a).expr - lf * lg)
        if lg != 0:
            assert _is_zero(fn_limit(f / g, a).expr - lf / lg)


@pytest.mark.parametrize(
    "sequence",
    [ALPHA / (ALPHA + 1), 2 - 2**-ALPHA, ALPHA**2 - ALPHA, 1 / ALPHA, sympy.atan(ALPHA)],
)
@pytest.mark.parametrize("k", range(1, 6))
def test_shifting_the_index_keeps_the_limit(sequence, k):
    # GIVEN
    expected = seq_limit(sequence)

    # WHEN
    shifted = seq_limit(sequence.subs(ALPHA, ALPHA + k))

    # THEN
    assert shifted.kind is expected.kind
    if expected.kind is LimitKind.NUMBER:
        assert _is_zero(shifted.expr - expected.expr)
    else:
        assert shifted.section == expected.section


# Derivatives and continuity


def test_derivative():
    assert derivative(X**2) == 2 * X
    assert derivative(X**3, 2) == Surreal(12)
    assert _is_zero(derivative(sympy.atan(X)) - 1 / (1 + X**2))
    assert _is_zero(derivative(sympy.exp(X)) - sympy.exp(X))
    assert _is_zero(derivative(sympy.log(X)) - 1 / X)


def test_weak_continuity():
    assert is_weakly_continuous(X**2, 1)
    assert is_weakly_continuous(sympy.exp(X), 0)
    assert not is_weakly_continuous(1 / X, 0)
    assert not is_weakly_continuous(X, INFTY)
