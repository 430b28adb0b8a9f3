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

import json

import pytest

from surreal_calc.config import DEFAULT_SETTINGS
from surreal_calc.errors import NotSummable, ParseError
from surreal_calc.expr import I, X
from surreal_calc.factories import Outcome, describe, json_result_factory, text_result_factory
from surreal_calc.foundations import Ordinal
from surreal_calc.gaps import INFTY, SurrealStream
from surreal_calc.limits import LimitResult
from surreal_calc.surreal import OMEGA, Surreal


@pytest.fixture
def text_result():
    return text_result_factory(DEFAULT_SETTINGS)


@pytest.fixture
def json_result():
    def render(outcome):
        return json.loads(json_result_factory(DEFAULT_SETTINGS)(outcome))

    return render


def test_describe():
    assert describe(OMEGA + 1, DEFAULT_SETTINGS) == "w + 1"
    assert describe(True, DEFAULT_SETTINGS) == "true"
    assert describe(2 * X, DEFAULT_SETTINGS) == "2*x"
    assert describe(Ordinal.omega() + 1, DEFAULT_SETTINGS) == "w + 1"


def test_describe_appends_conditions():
    result = LimitResult.number(1 / (1 - X), conditions=("-1 < x < 1",))
    assert describe(result, DEFAULT_SETTINGS) == "1/(1 - x) [if -1 < x < 1]"


def test_describe_shows_stream_terms_from_settings():
    stream = SurrealStream(1, -I)
    settings = DEFAULT_SETTINGS.replace(stream_terms=2)
    assert describe(stream, settings) == "1 + w^-1 + ... [i-th term: (1) * w^(-i), i >= 0]"


def test_text_result(text_result):
    assert text_result(Outcome("eval", "w", OMEGA)) == "w"
    assert text_result(Outcome("let", "let y = 2", Surreal(2), label="y")) == "y = 2"


def test_text_result_of_errors(text_result):
    # GIVEN
    outcome = Outcome("eval", "1 +", error=ParseError("boom", 3, {"name"}))

    # WHEN
    lines = text_result(outcome).split("\n")

    # THEN
    assert lines == [
        "error[parse-error]: boom at column 4 (expected name)",
        "  1 +",
        "     ^",
    ]
    failure = Outcome("sum", "sum 1/i", error=NotSummable("no closed form"))
    assert text_result(failure) == "error[not-summable]: no closed form"


def test_json_result(json_result):
    document = json_result(Outcome("eval", "w + 1", OMEGA + 1, provenance="normal-form"))
    assert document["kind"] == "surreal"
    assert document["value"] == "w + 1"
    assert document["provenance"] == "normal-form"
    assert document["label"] is None
    assert document["terms"] == [
        {"coeff": "1", "exponent": "1", "atom": "0"},
        {"coeff": "1", "exponent": "0", "atom": "0"},
    ]


def test_json_result_keys_are_sorted():
    text = json_result_factory(DEFAULT_SETTINGS)(Outcome("eval", "INFTY", INFTY))
    assert text.startswith('{"command": "eval", "kind": "section"')


def test_json_result_of_stream(json_result):
    document = json_result(Outcome("eval", "s", SurrealStream(1, -I)))
    assert document["kind"] == "stream"
    assert document["rule"] == "(1) * w^(-i)"
    assert document["start"] == 0
    assert document["bound"] is None
    assert len(document["terms"]) == DEFAULT_SETTINGS.stream_terms


def test_json_result_of_parse_error(json_result):
    document = json_result(Outcome("eval", "1 +", error=ParseError("boom", 3, {"number", "name"})))
    assert document["kind"] == "error"
    assert document["error"] == {
        "code": "parse-error",
        "exit_status": 2,
        "message": "boom at column 4 (expected name, number)",
        "position": 3,
        "expected": ["name", "number"],
    }


def test_json_result_of_limit(json_result):
    result = LimitResult.number(1 / (1 - X), conditions=("-1 < x < 1",))
    document = json_result(Outcome("sum", "sum x^i upto On", result))
    assert document["limit"] == "number"
    assert document["conditions"] == ["-1 < x < 1"]
    assert document["formula_only"] is False
