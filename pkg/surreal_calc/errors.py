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

"""Exceptions raised by the surreal calculus engines.

Every exception raised deliberately by this package derives from `Error`.
Each class carries a stable, machine readable `Error.code` and the process
`ExitStatus` that the command line front end reports for it, so scripts can
branch on failures without parsing messages::

    Error
    ├── ParseError
    ├── DomainError
    │   ├── UnsupportedClass
    │   ├── IllFormed
    │   └── DepthExceeded
    ├── InconclusiveComparison
    │   ├── PrecisionExhausted
    │   └── WitnessExhausted
    ├── NotSummable
    └── NotInClass
        ├── UndecidableAsymptotics
        └── EssentialSingularity
"""

from __future__ import annotations

import enum
from collections.abc import Iterable

__all__ = [
    "ExitStatus",
    "Error",
    "ParseError",
    "DomainError",
    "UnsupportedClass",
    "IllFormed",
    "DepthExceeded",
    "InconclusiveComparison",
    "PrecisionExhausted",
    "WitnessExhausted",
    "NotSummable",
    "NotInClass",
    "UndecidableAsymptotics",
    "EssentialSingularity",
    "exit_status_for",
]


class ExitStatus(enum.IntEnum):
    """Process exit statuses of the ``surreal-calc`` command."""

    OK = 0
    PARSE_ERROR = 2
    DOMAIN_ERROR = 3
    INCONCLUSIVE = 4
    NOT_SUMMABLE = 5


class Error(Exception):
    """This is the base class of all exceptions raised by this package.

    Attributes:
        code (str): A stable identifier for the failure, used in JSON output
            and documented in the command line reference.
    """

    code = "error"

    @property
    def exit_status(self) -> ExitStatus:
        """The `ExitStatus` the command line reports for this error."""
        return exit_status_for(self)


class ParseError(Error):
    """Exception raised for input outside the expression grammar.

    Attributes:
        position (int): Zero based character offset of the offending token.
        expected (frozenset[str]): The token kinds that would have been
            accepted at that position.
    """

    code = "parse-error"

    def __init__(
        self, message: str, position: int, expected: Iterable[str] = ()
    ) -> None:
        self.position = position
        self.expected = frozenset(expected)
        if self.expected:
            message = "%s at column %d (expected %s)" % (
                message,
                position + 1,
                ", ".join(sorted(self.expected)),
            )
        else:
            message = "%s at column %d" % (message, position + 1)
        super().__init__(message)


class DomainError(Error):
    """Exception raised when an argument lies outside an operation's domain.

    For instance, ``nlog`` is only defined for non-positive arguments.
    """

    code = "domain-error"


class UnsupportedClass(DomainError):
    """Exception raised for values outside the class an engine supports.

    Simplicity, birthdays and genetic forms are only computable for dyadic
    reals, ordinals, and finite normal forms built from them.
    """

    code = "unsupported-class"


class IllFormed(DomainError):
    """Exception raised for a form or section whose classes overlap."""

    code = "ill-formed"


class DepthExceeded(DomainError):
    """Exception raised when the recursive oracle passes its birthday bound."""

    code = "depth-exceeded"


class InconclusiveComparison(Error):
    """Exception raised when an order relation cannot be decided.

    This happens when two exact reals may be equal but the normalization
    rules cannot prove it, and refinement ran out of budget.
    """

    code = "inconclusive"


class PrecisionExhausted(InconclusiveComparison):
    """Exception raised when interval refinement exceeds its node budget."""

    code = "precision-exhausted"


class WitnessExhausted(InconclusiveComparison):
    """Exception raised when a gap's membership predicate runs out of witnesses."""

    code = "witness-exhausted"


class NotSummable(Error):
    """Exception raised when no closed form for a partial sum can be found.

    The summable class is polynomial, geometric, and polynomial times
    geometric terms, plus linear combinations of those.
    """

    code = "not-summable"


class NotInClass(Error):
    """Exception raised for expressions outside the closed-form class.

    The class is generated by rational functions, ``exp``, ``log`` and
    ``arctan`` under addition, multiplication and composition.
    """

    code = "not-in-class"


class UndecidableAsymptotics(NotInClass):
    """Exception raised when the limit of an exponent sequence can't be decided."""

    code = "undecidable-asymptotics"


class EssentialSingularity(NotInClass):
    """Exception raised when an expansion meets an essential singularity.

    ``exp(1/x)`` as ``x`` tends to ``0`` from the right is the typical case.
    """

    code = "essential-singularity"


_EXIT_STATUS_BY_ERROR = {
    ParseError: ExitStatus.PARSE_ERROR,
    DomainError: ExitStatus.DOMAIN_ERROR,
    InconclusiveComparison: ExitStatus.INCONCLUSIVE,
    NotSummable: ExitStatus.NOT_SUMMABLE,
    NotInClass: ExitStatus.NOT_SUMMABLE,
}


def exit_status_for(exc: BaseException) -> ExitStatus:
    """Return the exit status reported for ``exc``.

    Subclasses inherit the status of the nearest listed ancestor; anything
    unlisted, including unexpected exceptions, maps to
    `ExitStatus.DOMAIN_ERROR`.
    """
    for cls in type(exc).__mro__:
        status = _EXIT_STATUS_BY_ERROR.get(cls)
        if status is not None:
            return status
    return ExitStatus.DOMAIN_ERROR
