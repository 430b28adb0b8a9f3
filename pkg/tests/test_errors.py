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

import pytest

from surreal_calc import errors
from surreal_calc.errors import ExitStatus, exit_status_for


@pytest.mark.parametrize(
    "exc, status",
    [
        (errors.ParseError("bad", 0), ExitStatus.PARSE_ERROR),
        (errors.DomainError("bad"), ExitStatus.DOMAIN_ERROR),
        (errors.UnsupportedClass("bad"), ExitStatus.DOMAIN_ERROR),
        (errors.IllFormed("bad"), ExitStatus.DOMAIN_ERROR),
        (errors.DepthExceeded("bad"), ExitStatus.DOMAIN_ERROR),
        (errors.InconclusiveComparison("bad"), ExitStatus.INCONCLUSIVE),
        (errors.PrecisionExhausted("bad"), ExitStatus.INCONCLUSIVE),
        (errors.WitnessExhausted("bad"), ExitStatus.INCONCLUSIVE),
        (errors.NotSummable("bad"), ExitStatus.NOT_SUMMABLE),
        (errors.NotInClass("bad"), ExitStatus.NOT_SUMMABLE),
        (errors.UndecidableAsymptotics("bad"), ExitStatus.NOT_SUMMABLE),
        (errors.EssentialSingularity("bad"), ExitStatus.NOT_SUMMABLE),
        (ZeroDivisionError("bad"), ExitStatus.DOMAIN_ERROR),
    ],
)
def test_exit_status(exc, status):
    assert exit_status_for(exc) is status


def test_exit_status_property():
    assert errors.PrecisionExhausted("bad").exit_status == 4


def test_codes_are_distinct():
    classes = [getattr(errors, name) for name in errors.__all__]
    codes = [cls.code for cls in classes if isinstance(cls, type) and issubclass(cls, errors.Error)]
    assert len(codes) == len(set(codes))


def test_parse_error_message():
    assert str(errors.ParseError("unexpected ')'", 4)) == "unexpected ')' at column 5"
    exc = errors.ParseError("unexpected end of input", 3, ["')'", "','"])
    assert str(exc) == "unexpected end of input at column 4 (expected ')', ',')"
    assert exc.expected == frozenset({"')'", "','"})
