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

from surreal_calc.config import DEFAULT_SETTINGS, Settings


def test_defaults():
    assert DEFAULT_SETTINGS.budget_width == Fraction(1, 2**128)
    assert DEFAULT_SETTINGS.output_format == "text"


def test_replace_leaves_the_original_alone():
    # WHEN
    settings = DEFAULT_SETTINGS.replace(budget_nodes=10, output_format="json")

    # THEN
    assert settings.budget_nodes == 10
    assert settings.output_format == "json"
    assert DEFAULT_SETTINGS.budget_nodes == 10**6
    assert DEFAULT_SETTINGS.output_format == "text"


@pytest.mark.parametrize(
    "changes",
    [
        {"budget_width": 0},
        {"budget_width": Fraction(-1, 2)},
        {"budget_nodes": 0},
        {"stream_terms": 0},
        {"proof_window": -1},
        {"riemann_window": 0},
        {"output_format": "xml"},
    ],
)
def test_invalid_settings(changes):
    with pytest.raises(ValueError):
        Settings(**changes)
