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

"""Closed-form expressions over sympy.

Expressions handled by the limit, summation and integration engines are plain
`sympy.Expr` values over a fixed set of variables:

==========  =========================================================
`ALPHA`     the ordinal index of an On-length sequence
`I`, `N`    summation index and partial sum bound
`X`         the argument of a function
`A`, `B`    integration endpoints
`H`         the increment of a difference quotient
`T`         the local variable of an asymptotic expansion
`OMEGA`     the surreal constant ``w``
==========  =========================================================

Admissible expressions are the closure of rational functions, ``exp``,
``log`` and ``atan`` under sums, products and composition; `check_in_class`
enforces it.
"""

from __future__ import annotations

import sympy

from .errors import NotInClass
from .surreal import OMEGA_SYMBOL, Surreal

__all__ = [
    "ALPHA",
    "I",
    "N",
    "X",
    "A",
    "B",
    "H",
    "T",
    "OMEGA",
    "VARIABLES",
    "check_in_class",
    "constant_value",
    "is_constant",
]

ALPHA = sympy.Symbol("alpha", positive=True)
I = sympy.Symbol("i", integer=True, nonnegative=True)  # noqa: E741
N = sympy.Symbol("n", integer=True, nonnegative=True)
X = sympy.Symbol("x", real=True)
A = sympy.Symbol("a", real=True)
B = sympy.Symbol("b", real=True)
H = sympy.Symbol("h", real=True)
T = sympy.Symbol("t", positive=True)
OMEGA = OMEGA_SYMBOL

VARIABLES = {
    symbol.name: symbol for symbol in (ALPHA, I, N, X, A, B, H, T, OMEGA)
}

_FUNCTIONS = (sympy.exp, sympy.log, sympy.atan)


def check_in_class(expr: sympy.Expr, variables=None) -> sympy.Expr:
    """Return ``expr`` if it lies in the closed-form class.

    Args:
        expr: The expression to check.
        variables: If given, the only symbols besides ``w`` that may occur.

    Raises:
        NotInClass: ``expr`` uses a function outside the class, or a symbol
            outside ``variables``.
    """
    expr = sympy.sympify(expr)
    if variables is not None:
        allowed = set(variables) | {OMEGA}
        stray = expr.free_symbols - allowed
        if stray:
            raise NotInClass(
                "%s depends on %s" % (expr, ", ".join(sorted(map(str, stray))))
            )
    for node in sympy.preorder_traversal(expr):
        if node.is_Atom:
            if node.is_Symbol or node.is_Rational or node in (sympy.pi, sympy.E):
                continue
            raise NotInClass("%s is not an admissible constant" % node)
        if node.is_Add or node.is_Mul or node.is_Pow:
            continue
        if isinstance(node, _FUNCTIONS):
            continue
        raise NotInClass("%s is outside the closed-form class" % node.func)
    return expr


def is_constant(expr: sympy.Expr) -> bool:
    """Return whether ``expr`` has no free variable other than ``w``."""
    return not (sympy.sympify(expr).free_symbols - {OMEGA})


def constant_value(expr: sympy.Expr) -> Surreal:
    """Return a constant expression as a `.Surreal`."""
    return Surreal.from_sympy(sympy.sympify(expr))
