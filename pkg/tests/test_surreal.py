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

import itertools
import random
from fractions import Fraction

import pytest
import sympy

from surreal_calc.errors import DepthExceeded, IllFormed, UnsupportedClass
from surreal_calc.foundations import Ordering, Ordinal, from_sign_expansion, sign_expansion
from surreal_calc.surreal import (
    OMEGA,
    OMEGA_SYMBOL,
    ONE,
    ZERO,
    GeneticForm,
    Surreal,
    birthday,
    conway_arith_oracle,
    simplest_between,
    surreal_add,
    surreal_compare,
    surreal_normalize,
    to_genetic,
)

EPSILON = ONE / OMEGA


def _dyadics(max_day):
    values = {Fraction(0)}
    for day in range(1, max_day + 1):
        for signs in itertools.product("+-", repeat=day):
            values.add(from_sign_expansion("".join(signs)))
    return sorted(values)


DAY_SIX = _dyadics(6)
DAY_SEVEN = _dyadics(7)


def _random_surreal(rng):
    return surreal_normalize(
        (Fraction(rng.randint(-9, 9), rng.randint(1, 4)), rng.randint(-2, 2))
        for _ in range(rng.randint(0, 3))
    )


def test_normal_form_rendering():
    assert str(OMEGA + EPSILON) == "w + w^-1"
    assert str(3 * OMEGA**2 - Surreal(Fraction(1, 2))) == "3*w^2 - 1/2"
    assert str(ZERO) == "0"


def test_normalize_merges_and_sorts_terms():
    x = surreal_normalize([(1, -1), (2, 1), (3, -1), (-2, 1)])
    assert x == 4 * EPSILON


def test_module_example():
    x = OMEGA + Surreal(1) / OMEGA
    assert str(x + (Surreal(1) - Surreal(1) / OMEGA)) == "w + 1"


def test_surreal_add_cancels_terms():
    assert surreal_add(OMEGA + EPSILON, 1 - EPSILON) == OMEGA + 1
    assert surreal_add(ZERO, OMEGA) == OMEGA
    assert surreal_add(OMEGA, -OMEGA) == ZERO


def test_product_of_binomials():
    assert (OMEGA + 1) * (OMEGA - 1) == OMEGA**2 - 1


def test_order():
    assert OMEGA > 10**6
    assert EPSILON > 0
    assert EPSILON < Surreal(Fraction(1, 10**6))
    assert OMEGA - 1 < OMEGA < OMEGA + EPSILON
    assert surreal_compare(OMEGA, OMEGA) is Ordering.EQUAL


def test_division_by_multi_term_value_raises():
    with pytest.raises(UnsupportedClass):
        ONE / (OMEGA + 1)


def test_truncated_division():
    # WHEN
    quotient = ONE.truncated_div(OMEGA + 1, 3)

    # THEN
    assert str(quotient) == "w^-1 - w^-2 + w^-3"


def test_parts():
    x = OMEGA + 3 + 2 * EPSILON
    assert x.infinite_part() == OMEGA
    assert x.infinitesimal_part() == 2 * EPSILON
    assert (3 + EPSILON).standard_part() == 3
    assert not x.is_finite()
    assert x.as_ordinal() is None
    assert (OMEGA * 2 + 3).as_ordinal() == Ordinal.omega() * 2 + 3


def test_field_axioms_on_random_normal_forms():
    rng = random.Random(7)
    for _ in range(1000):
        a, b, c = (_random_surreal(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == ZERO
        assert a + ZERO == a
        assert a * ONE == a
        coeff = Fraction(rng.choice([-3, -2, -1, 1, 2, 5]), rng.randint(1, 4))
        m = Surreal.monomial(coeff, rng.randint(-2, 2))
        assert m * (ONE / m) == ONE
        assert a * (ONE / m) == a / m
        if a:
            assert (a < b) != (b <= a)


def test_sympy_round_trip():
    expr = OMEGA_SYMBOL**2 + 3 - OMEGA_SYMBOL ** sympy.Rational(-1, 2)
    x = Surreal.from_sympy(expr)
    assert str(x) == "w^2 + 3 - w^(-1/2)"
    assert Surreal.from_sympy(x.to_sympy()) == x


def test_from_sympy_rejects_free_variables():
    with pytest.raises(UnsupportedClass):
        Surreal.from_sympy(sympy.Symbol("x") + OMEGA_SYMBOL)


def test_exponential_atoms():
    # GIVEN
    atom = Surreal.from_sympy(sympy.exp(OMEGA_SYMBOL))

    # THEN
    assert str(atom) == "exp(w)"
    assert atom > Surreal.monomial(1, 100)
    assert str(atom - 1) == "exp(w) - 1"
    with pytest.raises(UnsupportedClass):
        atom * atom


# Genetic forms and the Conway oracle


def test_form_rejects_crossing_options():
    with pytest.raises(IllFormed):
        GeneticForm(frozenset({ONE}), frozenset({ZERO}))


@pytest.mark.parametrize(
    "x, text",
    [
        (Surreal(Fraction(3, 4)), "{1/2 | 1}"),
        (Surreal(Fraction(-3, 4)), "{-1 | -1/2}"),
        (Surreal(2), "{1 |}"),
        (ZERO, "{|}"),
        (OMEGA, "{1, 2, 3, ... |}"),
        (OMEGA + 1, "{w |}"),
    ],
)
def test_canonical_forms(x, text):
    assert str(to_genetic(x)) == text


def test_form_of_non_dyadic_rational_uses_families():
    form = to_genetic(Surreal(Fraction(1, 3)))
    lefts = form.left_options(6)
    rights = form.right_options(6)
    assert all(v < Surreal(Fraction(1, 3)) < w for v in lefts for w in rights)


def test_oracle_agrees_with_normal_form_arithmetic():
    forms = {x: to_genetic(Surreal(x)) for x in DAY_SIX}
    for x, y in itertools.product(DAY_SIX, repeat=2):
        fx, fy = forms[x], forms[y]
        assert conway_arith_oracle(fx, fy, "add", 6).value() == Surreal(x) + Surreal(y)
        assert conway_arith_oracle(fx, fy, "mul", 6).value() == Surreal(x) * Surreal(y)
        assert conway_arith_oracle(fx, fy, "compare", 6) is Ordering.of(x - y)


def test_oracle_negation():
    form = conway_arith_oracle(to_genetic(Surreal(Fraction(5, 8))), op="neg")
    assert form.value() == Surreal(Fraction(-5, 8))


def test_oracle_rejects_late_options():
    with pytest.raises(DepthExceeded):
        conway_arith_oracle(to_genetic(Surreal(Fraction(1, 64))), to_genetic(ONE), "add", 3)


# Simplicity and birthdays


def test_simplest_between_is_birthday_minimal():
    days = {x: len(sign_expansion(x)) for x in DAY_SEVEN}
    for low, high in itertools.combinations(DAY_SIX, 2):
        simplest = simplest_between([low], [high]).as_fraction()
        assert low < simplest < high
        assert days[simplest] == min(days[x] for x in DAY_SEVEN if low < x < high)


@pytest.mark.parametrize(
    "left, right, expected",
    [
        ([], [], ZERO),
        ([Fraction(1, 4)], [Fraction(3, 8)], Surreal(Fraction(5, 16))),
        ([3], [], Surreal(4)),
        ([], [-3], Surreal(-4)),
        ([OMEGA], [], OMEGA + 1),
        ([10], [OMEGA], Surreal(11)),
        ([OMEGA], [OMEGA + 1], OMEGA + Surreal(Fraction(1, 2))),
    ],
)
def test_simplest_between(left, right, expected):
    assert simplest_between(left, right) == expected


def test_simplest_between_rejects_crossing_sets():
    with pytest.raises(IllFormed):
        simplest_between([2], [1])


@pytest.mark.parametrize(
    "x, day",
    [
        (ZERO, Ordinal.finite(0)),
        (Surreal(Fraction(1, 2)), Ordinal.finite(2)),
        (Surreal(-3), Ordinal.finite(3)),
        (Surreal(Fraction(1, 3)), Ordinal.omega()),
        (OMEGA, Ordinal.omega()),
        (OMEGA + 1, Ordinal.omega() + 1),
        (OMEGA - 1, Ordinal.omega() + 1),
        (2 * OMEGA, Ordinal.omega() * 2),
        (EPSILON, Ordinal.omega()),
    ],
)
def test_birthday(x, day):
    assert birthday(x) == day


def test_birthday_of_atoms_is_unsupported():
    with pytest.raises(UnsupportedClass):
        birthday(Surreal.from_sympy(sympy.exp(OMEGA_SYMBOL)))
