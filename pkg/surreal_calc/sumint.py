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

"""Extrapolative summation and integration.

When ``sum_{i=0}^n a_i = f(n)`` for every natural ``n`` and a closed form
``f``, the sum up to an ordinal ``alpha`` is defined as ``f(alpha)``, and the
sum over On as the limit of ``f``.  `closed_form_partial_sum` finds ``f`` with
Gosper's algorithm, falling back on Faulhaber's formulas for polynomials
and on sympy's geometric sums for polynomials times geometric terms, and
checks it exactly against the literal sums of the first naturals.

Integrals are the limits of Riemann sums extrapolated the same way:

    ``g(alpha, a, b) = sum_{i=0}^alpha (b - a)/alpha * f(a + i*(b - a)/alpha)``

and ``integral_a^b f = lim g(alpha, a, b)`` as ``alpha`` runs through On.
The extrapolative integral is checked against the properties any integral
``T(a, b)`` should have, but it isn't claimed to be the only such ``T``.
"""

from __future__ import annotations

import functools
import logging
import math
from fractions import Fraction
from typing import Callable, NamedTuple

import sympy
from sympy.concrete.gosper import gosper_sum

from .config import DEFAULT_SETTINGS, Settings
from .errors import (
    DomainError,
    InconclusiveComparison,
    NotInClass,
    NotSummable,
    UnsupportedClass,
)
from .expr import ALPHA, A, B, I, N, OMEGA, X, check_in_class
from .foundations import ExactReal, Ordering, Ordinal, exactreal_compare, render_expr
from .gaps import INFTY, DedekindSection
from .limits import LimitKind, LimitResult, derivative, seq_limit
from .surreal import Surreal

__all__ = [
    "ClosedFormSum",
    "RiemannClosedForm",
    "IntegralReport",
    "ContractCheck",
    "FtcReport",
    "closed_form_partial_sum",
    "series_extrapolate",
    "riemann_closed_form",
    "integrate_extrapolative",
    "integral_contract_check",
    "ftc_check",
    "translation_check",
]

_LOGGER = logging.getLogger(__name__)

_PARAMETER_SAMPLES = (Fraction(1, 3), Fraction(-2, 7))
_ENDPOINT_SAMPLES = (
    (sympy.S.Zero, sympy.S.One),
    (sympy.Rational(-1, 2), sympy.Rational(3, 2)),
)
_NAIVE_PROBES = (97, 98, 99, 100)


def _vanishes(expr: sympy.Expr, settings: Settings = DEFAULT_SETTINGS) -> bool:
    """Decide whether ``expr`` is zero.

    Raises:
        InconclusiveComparison: ``expr`` is a constant that refinement can't
            separate from zero and the rules can't prove zero.
    """
    expr = sympy.expand(expr)
    if expr == 0:
        return True
    if expr.free_symbols or expr.is_Rational:
        return sympy.simplify(sympy.powsimp(expr)) == 0
    reduced = _exp_polynomial(expr)
    if reduced is not None:
        return sympy.cancel(reduced) == 0
    ordering = exactreal_compare(ExactReal(expr), ExactReal(0), settings)
    if ordering is Ordering.INCONCLUSIVE:
        raise InconclusiveComparison("cannot decide whether %s is zero" % render_expr(expr))
    return ordering is Ordering.EQUAL


def _exp_polynomial(expr: sympy.Expr) -> sympy.Expr | None:
    """Rewrite a constant built from rationals and ``exp(p/q)`` in ``z = e^(1/q)``.

    sympy treats ``exp(1/40)`` and ``exp(3/40)`` as unrelated constants.  As
    ``e`` is transcendental, the constant is zero exactly when the rational
    function of ``z`` is.  Returns ``None`` for any other constant.
    """
    powers = expr.atoms(sympy.exp)
    if not all(power.args[0].is_Rational for power in powers):
        return None
    q = math.lcm(*(int(power.args[0].q) for power in powers))
    z = sympy.Dummy("z", positive=True)
    reduced = expr.xreplace({power: z ** (power.args[0] * q) for power in powers})
    reduced = reduced.xreplace({sympy.E: z**q})
    if reduced.free_symbols != {z} or reduced.atoms(sympy.Function, sympy.NumberSymbol):
        return None
    return reduced


def _generic_branch(expr: sympy.Expr) -> tuple[sympy.Expr, tuple[str, ...]]:
    # Summation answers come as Piecewise((special, cond), (generic, True)).
    conditions = []

    def pick(piecewise):
        for branch in piecewise.args[:-1]:
            conditions.append("not %s" % render_expr(branch.cond))
        return piecewise.args[-1].expr

    return expr.replace(lambda e: isinstance(e, sympy.Piecewise), pick), tuple(conditions)


class ClosedFormSum(NamedTuple):
    """A closed form ``f(n)`` of the partial sums of a term ``a(i)``.

    Attributes:
        term: The term, an expression in `I`.
        partial_sum: ``f``, an expression in `N`.
        proof_window: ``f(n)`` equals the literal sum for every ``n`` up to
            this bound.
        method: ``gosper``, ``faulhaber`` or ``geometric``.
        conditions: Conditions under which ``f`` holds, such as ``not x = 1``.
    """

    term: sympy.Expr
    partial_sum: sympy.Expr
    proof_window: int
    method: str
    conditions: tuple[str, ...] = ()

    def __call__(self, n) -> sympy.Expr:
        return self.partial_sum.subs(N, n)

    def __str__(self) -> str:
        return "f(n) = %s [verified for n <= %d]" % (
            render_expr(self.partial_sum),
            self.proof_window,
        )


def _find_partial_sum(term: sympy.Expr) -> tuple[sympy.Expr, str]:
    try:
        found = gosper_sum(term, (I, 0, N))
    except (NotImplementedError, ValueError, sympy.PolynomialError) as exc:
        _LOGGER.debug("gosper failed on %s: %s", term, exc)
        found = None
    if found is not None:
        return found, "gosper"
    if term.is_polynomial(I):
        return sympy.summation(term, (I, 0, N)), "faulhaber"
    if _is_polynomial_geometric(term, I):
        return sympy.summation(term, (I, 0, N)), "geometric"
    raise NotSummable("%s has no hypergeometric closed form" % render_expr(term))


def _is_polynomial_geometric(term: sympy.Expr, index: sympy.Symbol) -> bool:
    """Whether ``term`` is a sum of polynomials times geometric factors in ``index``."""

    def linear(exponent):
        return exponent.is_polynomial(index) and sympy.diff(exponent, index, 2) == 0

    for addend in sympy.Add.make_args(sympy.expand(term)):
        for factor in sympy.Mul.make_args(addend):
            if not factor.has(index) or factor.is_polynomial(index):
                continue
            if isinstance(factor, sympy.exp) and linear(factor.args[0]):
                continue
            if factor.is_Pow and not factor.base.has(index) and linear(factor.exp):
                continue
            return False
    return True


def _parameter_samples(params: list[sympy.Symbol]) -> list[dict]:
    if not params:
        return [{}]
    return [
        {p: sympy.Rational(v.numerator, v.denominator) for p in params}
        for v in _PARAMETER_SAMPLES
    ]


def _check_window(term: sympy.Expr, partial: sympy.Expr, window: int) -> None:
    if not _vanishes(partial - partial.subs(N, N - 1) - term.subs(I, N)):
        raise NotSummable("%s does not telescope to %s" % (render_expr(partial), render_expr(term)))
    params = sorted((term.free_symbols | partial.free_symbols) - {I, N, OMEGA}, key=str)
    for sample in _parameter_samples(params):
        a, f = term.subs(sample), partial.subs(sample)
        total = sympy.S.Zero
        for n in range(window + 1):
            total += a.subs(I, n)
            if not _vanishes(f.subs(N, n) - total):
                raise NotSummable("%s is wrong at n = %d" % (render_expr(partial), n))


def closed_form_partial_sum(term, settings: Settings = DEFAULT_SETTINGS) -> ClosedFormSum:
    """Find ``f`` with ``sum_{i=0}^n term(i) = f(n)`` for every natural ``n``.

    Raises:
        NotInClass: ``term`` is outside the closed-form class.
        NotSummable: ``term`` is not Gosper-summable, a polynomial, or a
            polynomial times geometric term, as
            ``1/i`` is not, or the closed form failed its check.
    """
    term = check_in_class(sympy.sympify(term))
    if term.has(N):
        raise NotSummable("the term may not depend on the bound n")
    found, method = _find_partial_sum(term)
    partial, conditions = _generic_branch(sympy.simplify(found))
    _check_window(term, partial, settings.proof_window)
    _LOGGER.debug("sum of %s is %s by %s", term, partial, method)
    return ClosedFormSum(term, partial, settings.proof_window, method, conditions)


def _geometric_base(node: sympy.Expr):
    if not node.is_Pow or node.base.has(I) or not node.exp.has(I):
        return None
    base, exponent = node.base, node.exp
    if exponent.as_coeff_Mul()[0] < 0:
        base, exponent = 1 / base, -exponent
    return base, exponent


def _abstract_bases(term: sympy.Expr) -> tuple[sympy.Expr, dict]:
    """Replace numeric geometric bases inside (-1, 1) by real symbols.

    Returns the new term and the map from each symbol back to its base.
    """
    symbols: dict = {}

    def is_small(node):
        found = _geometric_base(node)
        if found is None or not found[0].is_number:
            return False
        return bool(0 < abs(found[0]) < 1)

    def abstract(node):
        base, exponent = _geometric_base(node)
        symbol = symbols.setdefault(base, sympy.Dummy("r", real=True))
        return symbol**exponent

    return term.replace(is_small, abstract), {s: b for b, s in symbols.items()}


def _symbolic_bases(expr: sympy.Expr, index: sympy.Symbol) -> set:
    return {
        node.base
        for node in sympy.preorder_traversal(expr)
        if node.is_Pow
        and node.exp.has(index)
        and not node.base.has(index)
        and not node.base.is_number
        and node.base.free_symbols - {OMEGA}
    }


def series_extrapolate(
    term,
    upto: Ordinal | int | None = None,
    naive: bool = False,
    settings: Settings = DEFAULT_SETTINGS,
):
    """Return ``sum_{i=0}^upto term(i)``, or the sum over On.

    Args:
        term: An expression in `I`.
        upto: An ordinal bound, or ``None`` for On.
        naive: Over On, return where the partial sums at the naturals get
            stuck instead of the extrapolated limit.
        settings: Supplies the proof window.

    Returns:
        For an ordinal bound, a `.Surreal`, or an expression when parameters
        remain.  Over On, a `.LimitResult`.  Symbolic geometric bases are
        assumed to lie in ``(-1, 1)`` and the result records it.

    Raises:
        NotSummable: ``term`` has no closed form partial sum.

    Example:
        >>> print(series_extrapolate(2**-I))
        2
    """
    term = check_in_class(sympy.sympify(term))
    abstracted, originals = _abstract_bases(term)
    closed = closed_form_partial_sum(abstracted, settings)
    if upto is not None:
        if naive:
            raise DomainError("--naive only applies to sums over On")
        return _evaluate_at(closed, Ordinal.finite(upto) if isinstance(upto, int) else upto, originals)
    if naive:
        return _naive_limit(closed.partial_sum.subs(originals), term.subs(originals))
    f = closed.partial_sum.subs(N, ALPHA)
    symbolic = sorted(_symbolic_bases(f, ALPHA) - set(originals), key=str)
    conditions = tuple("-1 < %s < 1" % render_expr(b) for b in symbolic)
    conditions += closed.conditions
    result = seq_limit(f, small_bases=tuple(originals) + tuple(symbolic))
    if result.kind is LimitKind.NUMBER:
        expr = sympy.simplify(result.expr.subs(originals))
        return LimitResult.number(expr, conditions=conditions, provenance=result.provenance)
    return result._replace(conditions=conditions)


def _evaluate_at(closed: ClosedFormSum, upto: Ordinal, originals: dict):
    bound = Surreal.from_ordinal(upto).to_sympy()
    value = sympy.expand(closed.partial_sum.subs(originals).subs(N, bound))
    if value.free_symbols - {OMEGA}:
        return value
    try:
        return Surreal.from_sympy(value)
    except UnsupportedClass:
        return value


def _naive_limit(partial: sympy.Expr, term: sympy.Expr) -> LimitResult:
    """Return where the partial sums at the naturals get stuck.

    A sequence indexed by the naturals has no limit in the surreals: its
    values stay real, so a sum tending to a real ``L`` from below is caught
    in the gap just below ``L`` and above every number less than ``L`` by a
    positive real.
    """
    provenance = "naive-partial-sums"
    try:
        real = sympy.limit(partial, N, sympy.oo)
    except (NotImplementedError, ValueError) as exc:
        raise NotInClass("cannot take the limit of %s" % render_expr(partial)) from exc
    if real is sympy.oo or real is sympy.S.NegativeInfinity:
        section = INFTY if real is sympy.oo else -INFTY
        return LimitResult.gap(section, formula_only=True, provenance=provenance)
    if not (real.is_finite and real.is_real):
        return LimitResult.no_limit("oscillatory", provenance=provenance)
    signs = {sympy.sign(term.subs(I, i)) for i in _NAIVE_PROBES}
    if signs == {0}:
        return LimitResult.number(real, provenance=provenance)
    if len(signs) > 1:
        return LimitResult.no_limit("oscillatory", provenance=provenance)
    below = signs.pop() > 0
    section = DedekindSection.type_two(
        Surreal.from_sympy(real), -1 if below else 1, DedekindSection.cut(0, "-")
    )
    return LimitResult.gap(section, formula_only=True, provenance=provenance)


# Integration


class RiemannClosedForm(NamedTuple):
    """A closed form ``g(alpha, a, b)`` of the ``alpha``-th Riemann sum.

    Attributes:
        integrand: ``f``, an expression in `X`.
        g: An expression in `ALPHA`, `A` and `B`.
        proof_window: ``g(n, c, d)`` equals the literal Riemann sum for every
            natural ``1 <= n`` up to this bound and the sampled ``c < d``.
    """

    integrand: sympy.Expr
    g: sympy.Expr
    proof_window: int

    def __call__(self, alpha, a, b) -> sympy.Expr:
        return self.g.subs({ALPHA: alpha, A: a, B: b})

    def __str__(self) -> str:
        return "g(alpha, a, b) = %s" % render_expr(self.g)


def _riemann_term(integrand: sympy.Expr, alpha, a, b) -> sympy.Expr:
    step = (b - a) / alpha
    return step * integrand.subs(X, a + I * step)


def riemann_closed_form(
    integrand, settings: Settings = DEFAULT_SETTINGS
) -> RiemannClosedForm:
    """Find the closed form of the Riemann sums of ``integrand``.

    Raises:
        NotSummable: The Riemann sum has no closed form, or the closed form
            failed its check on ``settings.riemann_window``.
        InconclusiveComparison: The check met a constant it couldn't decide.
    """
    return _riemann_closed_form(check_in_class(sympy.sympify(integrand)), settings)


@functools.lru_cache(maxsize=64)
def _riemann_closed_form(integrand: sympy.Expr, settings: Settings) -> RiemannClosedForm:
    term = sympy.expand_power_exp(_riemann_term(integrand, ALPHA, A, B))
    try:
        found = gosper_sum(term, (I, 0, ALPHA))
    except (NotImplementedError, ValueError, sympy.PolynomialError) as exc:
        raise NotSummable("cannot sum the Riemann sums of %s" % integrand) from exc
    if found is None:
        if not _is_polynomial_geometric(term, I):
            raise NotSummable("the Riemann sums of %s have no closed form" % render_expr(integrand))
        found = sympy.summation(term, (I, 0, ALPHA))
    # The special branch is the degenerate interval a = b.
    g, _ = _generic_branch(sympy.simplify(found))
    g = sympy.powdenest(g, force=True)
    window = settings.riemann_window
    for c, d in _ENDPOINT_SAMPLES:
        for n in range(1, window + 1):
            literal = sum(
                (_riemann_term(integrand, n, c, d).subs(I, i) for i in range(n + 1)),
                sympy.S.Zero,
            )
            if not _vanishes(g.subs({ALPHA: n, A: c, B: d}) - literal, settings):
                raise NotSummable("Riemann closed form of %s is wrong at n = %d" % (integrand, n))
    _LOGGER.debug("Riemann sums of %s: %s", integrand, g)
    return RiemannClosedForm(integrand, g, window)


class ContractCheck(NamedTuple):
    """The three properties of a definite integral ``T``.

    Attributes:
        constant: ``T(a, b) = c*(b - a)`` when the integrand is the constant
            ``c``; true when it isn't constant.
        bounds: ``m*(b - a) <= T(a, b) <= M*(b - a)`` for the minimum ``m``
            and maximum ``M`` of the integrand on ``[a, b]``.
        additivity: ``T(a, c) + T(c, b) = T(a, b)``.
        witnesses: The values each check compared, by check name.
    """

    constant: bool
    bounds: bool
    additivity: bool
    witnesses: dict

    def passed(self) -> bool:
        return self.constant and self.bounds and self.additivity

    def __str__(self) -> str:
        return ", ".join(
            "%s %s" % (name, "ok" if ok else "FAILED")
            for name, ok in (
                ("constant", self.constant),
                ("bounds", self.bounds),
                ("additivity", self.additivity),
            )
        )


class IntegralReport(NamedTuple):
    """The extrapolative integral of ``integrand`` over ``[a, b]``.

    Attributes:
        integrand: ``f``, an expression in `X`.
        a: The lower endpoint.
        b: The upper endpoint.
        value: A `.Surreal`, or an expression for symbolic endpoints.
        closed_form: The `RiemannClosedForm` the value was extrapolated from.
        contract: The `ContractCheck` of the integral, or ``None`` when the
            endpoints are symbolic.
    """

    integrand: sympy.Expr
    a: Surreal | sympy.Expr
    b: Surreal | sympy.Expr
    value: Surreal | sympy.Expr
    closed_form: RiemannClosedForm
    contract: ContractCheck | None

    def __str__(self) -> str:
        return str(self.value) if isinstance(self.value, Surreal) else render_expr(self.value)


def _endpoint(value) -> Surreal | sympy.Expr:
    if isinstance(value, DedekindSection):
        raise DomainError("cannot integrate up to the gap %s" % value)
    if isinstance(value, sympy.Basic):
        if value.free_symbols - {OMEGA}:
            return value
        return Surreal.from_sympy(value)
    return Surreal.coerce(value)


def _as_expr(value) -> sympy.Expr:
    return value.to_sympy() if isinstance(value, Surreal) else value


def integrate_extrapolative(
    integrand,
    a,
    b,
    settings: Settings = DEFAULT_SETTINGS,
    check: bool = True,
) -> IntegralReport:
    """Return ``integral_a^b integrand dx`` as the limit of its Riemann sums.

    Args:
        integrand: An expression in `X`.
        a: A number, or an expression for a symbolic endpoint.
        b: Likewise.
        settings: Supplies the Riemann proof window.
        check: Whether to run `integral_contract_check` on the result.

    Raises:
        DomainError: An endpoint is a gap, or ``a > b``.
        NotSummable: The Riemann sums have no closed form.
        NotInClass: The Riemann sums have no number limit.

    Example:
        >>> print(integrate_extrapolative(sympy.exp(X), 0, OMEGA))
        exp(w) - 1
    """
    a, b = _endpoint(a), _endpoint(b)
    if isinstance(a, Surreal) and isinstance(b, Surreal) and b < a:
        raise DomainError("the lower endpoint %s exceeds the upper endpoint %s" % (a, b))
    closed = riemann_closed_form(integrand, settings)
    g = closed.g.subs({A: _as_expr(a), B: _as_expr(b)})
    limit = seq_limit(g)
    if limit.kind is not LimitKind.NUMBER:
        raise NotInClass("the Riemann sums of %s tend to %s" % (render_expr(closed.integrand), limit))
    value = limit.value if limit.value is not None else limit.expr
    contract = None
    if check and isinstance(a, Surreal) and isinstance(b, Surreal):
        contract = integral_contract_check(None, closed.integrand, a, b, settings=settings)
    return IntegralReport(closed.integrand, a, b, value, closed, contract)


def _extrapolative(settings: Settings) -> Callable:
    def integrate(f, a, b):
        return integrate_extrapolative(f, a, b, settings, check=False).value

    return integrate


def _extremes(f: sympy.Expr, a: Surreal, b: Surreal) -> tuple[Surreal, Surreal]:
    candidates = [a, b]
    try:
        critical = sympy.solve(sympy.diff(f, X), X)
    except NotImplementedError as exc:
        raise UnsupportedClass("cannot locate the extremes of %s" % f) from exc
    for point in critical:
        if point.is_real:
            point = Surreal.from_sympy(point)
            if a <= point <= b:
                candidates.append(point)
    values = [Surreal.from_sympy(f.subs(X, p.to_sympy())) for p in candidates]
    return min(values), max(values)


def integral_contract_check(
    integrate: Callable | None,
    f,
    a,
    b,
    c=None,
    settings: Settings = DEFAULT_SETTINGS,
) -> ContractCheck:
    """Check the three defining properties of a definite integral.

    Args:
        integrate: A routine ``T(f, a, b)`` returning a `.Surreal`, or
            ``None`` for the extrapolative integral.
        f: The integrand, an expression in `X`.
        a: The lower endpoint.
        b: The upper endpoint.
        c: The split point for additivity; defaults to the midpoint.
        settings: Passed on to the extrapolative integral.

    Failures are reported in the result, never raised.
    """
    integrate = integrate or _extrapolative(settings)
    f = sympy.sympify(f)
    a, b = Surreal.coerce(a), Surreal.coerce(b)
    c = (a + b) / 2 if c is None else Surreal.coerce(c)
    whole = integrate(f, a, b)
    witnesses = {"T(a,b)": whole}

    constant = True
    if not f.has(X):
        expected = Surreal.from_sympy(f) * (b - a)
        witnesses["c(b-a)"] = expected
        constant = whole == expected

    low, high = _extremes(f, a, b)
    witnesses["m(b-a)"], witnesses["M(b-a)"] = low * (b - a), high * (b - a)
    bounds = low * (b - a) <= whole <= high * (b - a)

    split = integrate(f, a, c) + integrate(f, c, b)
    witnesses["T(a,c)+T(c,b)"] = split
    additivity = split == whole
    result = ContractCheck(constant, bounds, additivity, witnesses)
    if not result.passed():
        _LOGGER.debug("integral of %s on [%s, %s] fails: %s", f, a, b, result)
    return result


class FtcReport(NamedTuple):
    """The fundamental theorem of calculus checked on ``g(x) = integral_a^x f``.

    Attributes:
        antiderivative: ``g``, an expression in `X`.
        derivative: ``g'`` from the difference quotient.
        matches: Whether ``g'`` normalizes to ``f``.
        pointwise: ``(point, equal)`` pairs for the sample points.
    """

    antiderivative: sympy.Expr
    derivative: sympy.Expr
    matches: bool
    pointwise: tuple[tuple[Surreal, bool], ...]

    def __str__(self) -> str:
        return "g(x) = %s, g'(x) = %s: %s" % (
            render_expr(self.antiderivative),
            render_expr(self.derivative),
            "matches" if self.matches else "DIFFERS",
        )


def ftc_check(f, a, sample_points=(), settings: Settings = DEFAULT_SETTINGS) -> FtcReport:
    """Check that ``d/dx integral_a^x f(t) dt`` is ``f(x)``.

    Raises:
        NotSummable: ``f`` has no Riemann closed form.
        NotInClass: The integral or its derivative has no limit.
    """
    f = check_in_class(sympy.sympify(f))
    report = integrate_extrapolative(f, a, X, settings, check=False)
    antiderivative = sympy.sympify(_as_expr(report.value))
    slope = derivative(antiderivative)
    matches = _vanishes(slope - f)
    pointwise = []
    for point in sample_points:
        point = Surreal.coerce(point)
        at = point.to_sympy()
        pointwise.append(
            (point, Surreal.from_sympy(slope.subs(X, at)) == Surreal.from_sympy(f.subs(X, at)))
        )
    return FtcReport(antiderivative, slope, matches, tuple(pointwise))


def translation_check(f, a, b, t, settings: Settings = DEFAULT_SETTINGS) -> bool:
    """Return whether ``integral_a^b f(x) dx = integral_{a-t}^{b-t} f(x + t) dx``."""
    f = check_in_class(sympy.sympify(f))
    t = Surreal.coerce(t)
    integrate = _extrapolative(settings)
    shifted = f.subs(X, X + t.to_sympy())
    a, b = Surreal.coerce(a), Surreal.coerce(b)
    return integrate(f, a, b) == integrate(shifted, a - t, b - t)
