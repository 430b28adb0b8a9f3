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

import mpmath
import pytest
import sympy

from surreal_calc.errors import DomainError, UnsupportedClass
from surreal_calc.foundations import PI, ExactReal
from surreal_calc.gaps import SurrealStream
from surreal_calc.surreal import OMEGA, ONE, ZERO, GeneticForm, Surreal, to_genetic
from surreal_calc.transcend import (
    FunctionId,
    Truncation,
    evaluation_path,
    maclaurin_trunc,
    option_filter,
    surreal_exp,
    ul_arctan,
    ul_nlog,
)

EPSILON = ONE / OMEGA
HALF_PI = Surreal(PI / 2)
WIDTH = Fraction(1, 2**64)


def _encloses(x: Surreal, expected) -> bool:
    low, high = x.real_value().refine(WIDTH)
    slack = mpmath.mpf(10) ** -40
    return (
        mpmath.mpf(low.numerator) / low.denominator - slack
        <= expected
        <= mpmath.mpf(high.numerator) / high.denominator + slack
    )


def test_maclaurin_truncation():
    assert maclaurin_trunc("arctan", Fraction(1, 2), 3) == Fraction(11, 24)
    assert maclaurin_trunc("nlog", Fraction(-1, 2), 2) == Fraction(-3, 8)
    assert maclaurin_trunc(FunctionId.ARCTAN, EPSILON, 3) == EPSILON - EPSILON**3 / 3


def test_truncation_polynomial():
    k = sympy.Symbol("k")
    truncation = Truncation(FunctionId.ARCTAN, Fraction(1, 2), 5)
    assert truncation.polynomial(k) == k - k**3 / 3 + k**5 / 5
    assert truncation.value() == Fraction(1, 2) - Fraction(1, 24) + Fraction(1, 160)


_TENTHS = [Fraction(k, 10) for k in range(1, 11)]


def _arctan(z):
    return ExactReal(sympy.atan(sympy.Rational(z.numerator, z.denominator)))


def _nlog(z):
    return ExactReal(-sympy.log(1 - sympy.Rational(z.numerator, z.denominator)))


@pytest.mark.parametrize("z", _TENTHS)
def test_arctan_truncations_below_the_function_on_the_right(z):
    for n in range(1, 11):
        assert ExactReal(maclaurin_trunc("arctan", z, 4 * n - 1)) < _arctan(z)


@pytest.mark.parametrize("z", [-z for z in _TENTHS])
def test_arctan_truncations_below_the_function_on_the_left(z):
    for n in range(11):
        assert ExactReal(maclaurin_trunc("arctan", z, 4 * n + 1)) < _arctan(z)


@pytest.mark.parametrize("z", _TENTHS[:-1])
def test_nlog_truncations_below_the_function_on_the_right(z):
    for n in range(1, 11):
        assert ExactReal(maclaurin_trunc("nlog", z, n)) < _nlog(z)


@pytest.mark.parametrize("z", [-z for z in _TENTHS[:-1]])
def test_nlog_odd_truncations_below_the_function_on_the_left(z):
    for n in range(11):
        assert ExactReal(maclaurin_trunc("nlog", z, 2 * n + 1)) < _nlog(z)


def test_truncation_order_must_be_non_negative():
    with pytest.raises(ValueError):
        maclaurin_trunc("arctan", Fraction(1), -1)


@pytest.mark.parametrize(
    "function_id, x, path",
    [
        ("arctan", Surreal(Fraction(1, 2)), "real"),
        ("arctan", EPSILON, "monomial-stream"),
        ("arctan", OMEGA, "family"),
        ("arctan", -OMEGA, "symmetry"),
        ("nlog", -EPSILON, "monomial-stream"),
    ],
)
def test_evaluation_path(function_id, x, path):
    assert evaluation_path(function_id, x) == path


@pytest.mark.parametrize(
    "function_id, x",
    [("arctan", OMEGA + 1), ("arctan", OMEGA + EPSILON), ("nlog", -OMEGA)],
)
def test_evaluation_path_outside_supported_class(function_id, x):
    with pytest.raises(UnsupportedClass):
        evaluation_path(function_id, x)


# arctan


def test_arctan_of_omega():
    # WHEN
    value = ul_arctan(OMEGA)

    # THEN
    assert str(value) == "pi/2 - w^-1"
    assert value == HALF_PI - EPSILON
    assert ul_arctan(-OMEGA) == -value


def test_arctan_of_infinitesimal_is_a_stream():
    stream = ul_arctan(EPSILON)
    assert isinstance(stream, SurrealStream)
    for i in range(8):
        term = stream.term(i)
        assert term.coeff == ExactReal(Fraction((-1) ** i, 2 * i + 1))
        assert term.exponent == Surreal(-(2 * i + 1))
    assert stream.partial_sum(2) == EPSILON - EPSILON**3 / 3


def test_arctan_addition_formula_fails_at_omega():
    # GIVEN
    total = ul_arctan(OMEGA) + ul_arctan(EPSILON).partial_sum(8)

    # WHEN
    difference = total - HALF_PI

    # THEN the values differ already in the w^-3 term
    lead = difference.leading_term()
    assert lead.exponent == Surreal(-3)
    assert lead.coeff == ExactReal(Fraction(-1, 3))


def test_arctan_of_random_rationals():
    rng = random.Random(1234)
    with mpmath.workdps(40):
        for _ in range(100):
            x = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            expected = mpmath.atan(mpmath.mpf(x.numerator) / x.denominator)
            assert _encloses(ul_arctan(Surreal(x)), expected)


# nlog


def test_nlog_of_positive_argument_raises():
    with pytest.raises(DomainError):
        ul_nlog(Surreal(Fraction(1, 2)))


def test_nlog_of_negative_infinitesimal_is_a_stream():
    stream = ul_nlog(-EPSILON)
    assert stream.start == 1
    assert stream.partial_sum(2) == -EPSILON - EPSILON**2 / 2


def test_nlog_of_random_rationals():
    rng = random.Random(4321)
    with mpmath.workdps(40):
        for _ in range(100):
            x = Fraction(-rng.randint(0, 100), rng.randint(1, 10))
            expected = -mpmath.log(1 - mpmath.mpf(x.numerator) / x.denominator)
            assert _encloses(ul_nlog(Surreal(x)), expected)


# exp


def test_exp_of_infinite_number_is_an_atom():
    assert surreal_exp(OMEGA + 2) == Surreal.monomial(ExactReal(sympy.exp(2)), 0, OMEGA)
    assert str(surreal_exp(OMEGA)) == "exp(w)"


def test_exp_of_infinitesimal_is_a_stream():
    stream = surreal_exp(EPSILON)
    assert stream.partial_sum(3) == 1 + EPSILON + EPSILON**2 / 2


@pytest.mark.parametrize("x", [OMEGA + EPSILON, EPSILON + EPSILON**2])
def test_exp_outside_supported_class(x):
    with pytest.raises(UnsupportedClass):
        surreal_exp(x)


# Option filtering


def test_arctan_options_of_a_real_survive():
    # GIVEN
    x = Surreal(Fraction(1, 2))
    value = ul_arctan(x)

    # WHEN
    report = option_filter(to_genetic(x), "arctan")

    # THEN
    assert report.removed == []
    assert not report.rerepresented
    assert all(record.value < value for record in report.kept_left)
    assert all(value < record.value for record in report.kept_right)


def test_arctan_options_at_omega_lose_right_anchored_values():
    report = option_filter(to_genetic(OMEGA), "arctan", OMEGA)
    assert [record.anchor for record in report.kept_right] == [None]
    assert report.kept_right[0].value == HALF_PI
    tags = {tag for _, tag in report.removed}
    assert "left-anchor-beyond-pi/2" in tags
    assert tags <= {"left-anchor-beyond-pi/2", "quotient-exceeds-one"}


def test_arctan_anchor_with_large_quotient_is_removed():
    # GIVEN an anchor y = -1 for x = 2, where (x - y)/(1 + x*y) = -3
    form = GeneticForm(frozenset({Surreal(-1)}), frozenset())

    # WHEN
    report = option_filter(form, "arctan", Surreal(2))

    # THEN
    assert [tag for _, tag in report.removed] == ["quotient-exceeds-one"]
    assert [record.anchor for record in report.kept_left] == [None]


def test_nlog_rerepresents_when_a_side_is_lost():
    # WHEN
    report = option_filter(to_genetic(Surreal(-1)), "nlog")

    # THEN
    assert report.rerepresented
    assert str(report.form) == "{-3/2 | -1/2}"
    assert report.removed == []
    assert report.render().startswith("form {-3/2 | -1/2} (re-represented)")


def test_option_filter_of_zero_has_only_constant_options():
    report = option_filter(to_genetic(ZERO), "arctan")
    assert [record.formula for record in report.kept_left] == ["-pi/2"]
    assert [record.formula for record in report.kept_right] == ["pi/2"]


def test_option_filter_report_renders_each_option():
    # WHEN
    text = option_filter(to_genetic(Surreal(Fraction(1, 2))), "arctan").render()

    # THEN
    lines = text.split("\n")
    assert lines[0] == "form {0 | 1}"
    assert any(line.startswith("  left  -pi/2") for line in lines)
    assert any(line.startswith("  right pi/2") for line in lines)
    assert all(line.startswith(("  left  ", "  right ")) for line in lines[1:])
