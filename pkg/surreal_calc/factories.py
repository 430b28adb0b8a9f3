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

"""This module provides factory functions for rendering command results.

`.cli.Session` has a public ``result_factory`` property that controls how each
`Outcome` is turned into output.  By default results are rendered as text,
but you can receive them as JSON documents by using `json_result_factory` as
the ``result_factory``.

A factory function will be called with the session's `.Settings`, and must
return a callable that will be called once per command with its `Outcome`.
"""

from __future__ import annotations

import json
from collections.abc import Callable
from typing import Any, NamedTuple

import sympy

from .config import Settings
from .errors import Error, ParseError
from .foundations import ExactReal, Ordinal, render_expr
from .gaps import DedekindSection, SurrealStream
from .limits import CauchyResult, LimitKind, LimitResult
from .sumint import ClosedFormSum, FtcReport, IntegralReport
from .surreal import GeneticForm, Surreal
from .transcend import OptionFilterReport

__all__ = ["Outcome", "text_result_factory", "json_result_factory", "describe"]


class Outcome(NamedTuple):
    """The result of evaluating one command line."""

    command: str
    source: str
    value: Any = None
    provenance: str | None = None
    label: str | None = None
    error: Error | None = None


Outcome.command.__doc__ = "The command keyword, or ``eval`` for an expression."
Outcome.source.__doc__ = "The command line as typed."
Outcome.value.__doc__ = "What the engine returned; ``None`` on error."
Outcome.provenance.__doc__ = "Which fast path, engine or oracle produced the value."
Outcome.label.__doc__ = "The bound name for ``let``, the option for ``set``."
Outcome.error.__doc__ = "The `.Error` the command raised, if any."


def describe(value, settings: Settings) -> str:
    """Return the text rendering of an engine result.

    Streams show their first ``settings.stream_terms`` terms and the index
    rule; conditions of a limit are appended in brackets.
    """
    if isinstance(value, SurrealStream):
        return value.render(settings.stream_terms)
    if isinstance(value, LimitResult):
        text = str(value)
        if value.conditions:
            text += " [if %s]" % " and ".join(value.conditions)
        return text
    if isinstance(value, OptionFilterReport):
        return value.render()
    if isinstance(value, sympy.Basic):
        return render_expr(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def text_result_factory(settings: Settings) -> Callable[[Outcome], str]:
    """Render each result as one or more lines of text.

    Errors are rendered as ``error[<code>]: <message>``; a parse error adds a
    caret line under the offending column.

    Example:
        >>> session.result_factory = text_result_factory
        >>> print(session.execute("arctan(w)"))
        pi/2 - w^-1
    """

    def text_result(outcome: Outcome) -> str:
        if outcome.error is not None:
            text = "error[%s]: %s" % (outcome.error.code, outcome.error)
            if isinstance(outcome.error, ParseError):
                text += "\n  %s\n  %s^" % (outcome.source, " " * outcome.error.position)
            return text
        text = describe(outcome.value, settings)
        if outcome.label is not None:
            return "%s = %s" % (outcome.label, text)
        return text

    return text_result


def json_result_factory(settings: Settings) -> Callable[[Outcome], str]:
    """Render each result as a single line JSON document.

    Keys are sorted, so equal results always render to equal bytes.  Every
    document carries ``command``, ``kind`` and ``provenance``; successful
    results add ``value`` and a kind specific structure, errors add
    ``error`` with the error code, exit status and message.

    Example:
        >>> session.result_factory = json_result_factory
        >>> print(session.execute("birthday(1/2)"))
        {"command": "eval", "kind": "ordinal", "label": null, "provenance": "normal-form, sign-expansion", "value": "2"}
    """

    def json_result(outcome: Outcome) -> str:
        document: dict[str, Any] = {
            "command": outcome.command,
            "label": outcome.label,
            "provenance": outcome.provenance,
        }
        if outcome.error is not None:
            document["kind"] = "error"
            document["error"] = _error_document(outcome.error)
        else:
            document.update(_value_document(outcome.value, settings))
        return json.dumps(document, sort_keys=True)

    return json_result


def _error_document(error: Error) -> dict[str, Any]:
    document = {
        "code": error.code,
        "exit_status": int(error.exit_status),
        "message": str(error),
    }
    if isinstance(error, ParseError):
        document["position"] = error.position
        document["expected"] = sorted(error.expected)
    return document


def _terms(value: Surreal) -> list[dict[str, str]]:
    return [
        {"coeff": str(coeff), "exponent": str(exponent), "atom": str(atom)}
        for coeff, exponent, atom in value.terms
    ]


def _value_document(value, settings: Settings) -> dict[str, Any]:
    text = describe(value, settings)
    if isinstance(value, Surreal):
        return {"kind": "surreal", "value": text, "terms": _terms(value)}
    if isinstance(value, SurrealStream):
        return {
            "kind": "stream",
            "value": text,
            "terms": _terms(value.partial_sum(settings.stream_terms)),
            "rule": value.rule_text(),
            "start": value.start,
            "bound": None if value.bound is None else str(value.bound),
        }
    if isinstance(value, DedekindSection):
        return {"kind": "section", "section": value.kind.value, "value": text}
    if isinstance(value, LimitResult):
        return {
            "kind": "limit",
            "limit": value.kind.value,
            "value": str(value) if value.kind is LimitKind.NUMBER else None,
            "section": None if value.section is None else str(value.section),
            "reason": value.reason,
            "formula_only": value.formula_only,
            "conditions": list(value.conditions),
        }
    if isinstance(value, CauchyResult):
        return {
            "kind": "cauchy",
            "cauchy": value.kind.value,
            "value": text,
            "section": None if value.section is None else str(value.section),
            "reason": value.reason,
        }
    if isinstance(value, IntegralReport):
        contract = value.contract
        return {
            "kind": "integral",
            "value": text,
            "closed_form": str(value.closed_form),
            "contract": None
            if contract is None
            else {
                "constant": contract.constant,
                "bounds": contract.bounds,
                "additivity": contract.additivity,
            },
        }
    if isinstance(value, FtcReport):
        return {
            "kind": "ftc",
            "value": text,
            "antiderivative": render_expr(value.antiderivative),
            "derivative": render_expr(value.derivative),
            "matches": value.matches,
        }
    if isinstance(value, ClosedFormSum):
        return {
            "kind": "closed-form",
            "value": render_expr(value.partial_sum),
            "method": value.method,
            "proof_window": value.proof_window,
            "conditions": list(value.conditions),
        }
    if isinstance(value, OptionFilterReport):
        return {
            "kind": "options",
            "value": str(value.form),
            "left": [str(option) for option in value.kept_left],
            "right": [str(option) for option in value.kept_right],
            "removed": [[str(option), tag] for option, tag in value.removed],
            "rerepresented": value.rerepresented,
        }
    if isinstance(value, GeneticForm):
        return {"kind": "genetic", "value": text}
    if isinstance(value, Ordinal):
        return {"kind": "ordinal", "value": text}
    if isinstance(value, (ExactReal, sympy.Basic)):
        return {"kind": "expression", "value": text}
    if isinstance(value, bool):
        return {"kind": "boolean", "value": value}
    return {"kind": "text", "value": text}
