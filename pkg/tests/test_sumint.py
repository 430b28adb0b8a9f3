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

from fractions import Fraction

import pytest
import sympy

from surreal_calc.config import DEFAULT_SETTINGS
from surreal_calc.errors import DomainError, InconclusiveComparison, NotSummable
from surreal_calc.expr import ALPHA, A, B, I, N, X
from surreal_calc.foundations import Ordinal
from surreal_calc.gaps import INFTY, ON
from surreal_calc.limits import LimitKind
from surreal_calc.sumint import (
    _vanishes,
    closed_form_partial_sum,
    ftc_check,
    integral_contract_check,
    integrate_extrapolative,
    riemann_closed_form,
    series_extrapolate,
    translation_check,
)
from surreal_calc.surreal import OMEGA, Surreal


def _is_zero(expr):
    return sympy.simplify(expr) == 0


# Sums


def test_closed_form_partial_sum():
    closed = closed_form_partial_sum(I)
    assert _is_zero(closed.partial_sum - N * (N + 1) / 2)
    assert closed.proof_window == DEFAULT_SETTINGS.proof_window
    assert closed(4) == 10


def test_closed_form_rejects_terms_without_closed_form():
    with pytest.raises(NotSummable):
        closed_form_partial_sum(1 / (I + 1))


def test_closed_form_rejects_terms_using_the_bound():
    with pytest.raises(NotSummable):
        closed_form_partial_sum(I + N)


def test_sum_over_on():
    # WHEN
    result = series_extrapolate(sympy.Rational(1, 2) ** I)

    # THEN
    assert result.kind is LimitKind.NUMBER
    assert str(result) == "2"
    assert result.conditions == ()


@pytest.mark.parametrize(
    "base, expected",
    [
        (sympy.Rational(1, 2), sympy.Integer(2)),
        (sympy.Rational(-1, 2), sympy.Rational(2, 3)),
        (sympy.Rational(1, 3), sympy.Rational(3, 2)),
        (sympy.Rational(-3, 4), sympy.Rational(4, 7)),
    ],
)
def test_geometric_series(base, expected):
    assert series_extrapolate(base**I).expr == expected


def test_geometric_series_with_symbolic_ratio():
    result = series_extrapolate(X**I)
    assert _is_zero(result.expr - 1 / (1 - X))
    assert result.conditions == ("-1 < x < 1",)


def test_divergent_sum_tends_to_on():
    result = series_extrapolate(I)
    assert result.kind is LimitKind.GAP
    assert result.section == ON


@pytest.mark.parametrize(
    "term, upto, expected",
    [
        (I, 3, Surreal(6)),
        (sympy.S.One, Ordinal.omega(), OMEGA + 1),
        (I, Ordinal.omega(), OMEGA**2 / 2 + OMEGA / 2),
    ],
)
def test_sum_up_to_an_ordinal(term, upto, expected):
    assert series_extrapolate(term, upto) == expected


def test_naive_partial_sums_get_stuck_below_the_limit():
    # WHEN
    result = series_extrapolate(sympy.Rational(1, 2) ** I, naive=True)

    # THEN
    assert result.kind is LimitKind.GAP
    assert result.formula_only
    assert str(result) == "gap{ 2 - w^Theta{cut(0-)} }"


def test_naive_requires_a_sum_over_on():
    with pytest.raises(DomainError):
        series_extrapolate(I, 3, naive=True)


# Integrals


def test_riemann_closed_form():
    closed = riemann_closed_form(X)
    assert closed.proof_window == DEFAULT_SETTINGS.riemann_window
    assert _is_zero(sympy.limit(closed.g, ALPHA, sympy.oo) - (B**2 - A**2) / 2)


def test_integral_of_exp_up_to_omega():
    report = integrate_extrapolative(sympy.exp(X), 0, OMEGA)
    assert str(report) == "exp(w) - 1"


def test_riemann_sums_of_exp_have_a_closed_form():
    # WHEN
    closed = riemann_closed_form(sympy.exp(X))

    # THEN the closed form tends to e - 1 on [0, 1]
    g = closed.g.subs({A: 0, B: 1})
    assert _is_zero(sympy.limit(g, ALPHA, sympy.oo) - (sympy.E - 1))


def test_partial_sums_of_polynomial_times_geometric_terms():
    closed = closed_form_partial_sum((I + 1) * sympy.exp(I))
    assert _vanishes(closed(3) - sum((i + 1) * sympy.exp(i) for i in range(4)))


@pytest.mark.parametrize(
    "integrand, a, b, expected",
    [
        (X, 0, 1, Surreal(Fraction(1, 2))),
        (X**2, 0, 3, Surreal(9)),
        (sympy.Integer(5), 1, 3, Surreal(10)),
        (X, 0, OMEGA, OMEGA**2 / 2),
    ],
)
def test_definite_integrals(integrand, a, b, expected):
    report = integrate_extrapolative(integrand, a, b)
    assert report.value == expected
    assert report.contract.passed()


def test_integral_with_symbolic_endpoints():
    report = integrate_extrapolative(X, A, B)
    assert _is_zero(report.value - (B**2 - A**2) / 2)
    assert report.contract is None


@pytest.mark.parametrize("a, b", [(1, 0), (0, INFTY)])
def test_integral_rejects_bad_endpoints(a, b):
    with pytest.raises(DomainError):
        integrate_extrapolative(X, a, b)


@pytest.mark.parametrize("integrand", [X, X**2 - X, sympy.exp(X), sympy.Integer(3)])
@pytest.mark.parametrize(
    "a, b",
    [(0, 1), (-1, 2), (Fraction(1, 2), Fraction(3, 2))],
)
def test_extrapolative_integral_keeps_its_contract(integrand, a, b):
    assert integral_contract_check(None, integrand, a, b).passed()


def test_contract_check_reports_a_wrong_integral():
    # GIVEN a routine that squares the length of the interval
    def wrong(f, a, b):
        return (b - a) ** 2

    # WHEN
    check = integral_contract_check(wrong, sympy.S.One, 0, 2)

    # THEN
    assert not check.passed()
    assert str(check) == "constant FAILED, bounds FAILED, additivity FAILED"
    assert check.witnesses["T(a,b)"] == Surreal(4)


def test_fundamental_theorem():
    # WHEN
    report = ftc_check(X**2, 0, sample_points=(1, OMEGA))

    # THEN
    assert report.matches
    assert str(report) == "g(x) = x^3/3, g'(x) = x^2: matches"
    assert all(equal for _, equal in report.pointwise)


@pytest.mark.parametrize(
    "f, a, b, t",
    [(X**2, 0, 1, 3), (X, 0, OMEGA, 1), (sympy.exp(X), 0, 1, 2)],
)
def test_translation_invariance(f, a, b, t):
    assert translation_check(f, a, b, t)


# Deciding zero


@pytest.mark.parametrize(
    "expr, zero",
    [
        (sympy.exp(-110), False),
        (sympy.exp(sympy.Rational(1, 40)) ** 3 - sympy.exp(sympy.Rational(3, 40)), True),
        (
            sympy.exp(sympy.Rational(1, 40)) ** 3
            - sympy.exp(sympy.Rational(3, 40))
            + sympy.exp(-110),
            False,
        ),
        (sympy.E * sympy.exp(sympy.Rational(1, 2)) - sympy.exp(sympy.Rational(3, 2)), True),
        (sympy.pi - sympy.Rational(22, 7), False),
    ],
)
def test_zero_is_decided_exactly(expr, zero):
    assert _vanishes(expr) is zero


def test_undecided_zero_is_inconclusive():
    settings = DEFAULT_SETTINGS.replace(budget_nodes=1)
    with pytest.raises(InconclusiveComparison):
        _vanishes(sympy.pi - 3, settings)
