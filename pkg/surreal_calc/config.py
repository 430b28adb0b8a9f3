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

"""Tunable budgets and defaults shared by every engine.

A `Settings` value is immutable.  Sessions and scripts change configuration
by deriving a new value with `Settings.replace`, so a change applies only to
the commands evaluated after it.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Any

__all__ = ["Settings", "DEFAULT_SETTINGS", "OUTPUT_FORMATS"]

OUTPUT_FORMATS = ("text", "json")


@dataclasses.dataclass(frozen=True)
class Settings:
    """Budgets, proof windows and output options.

    Attributes:
        budget_width: Target width of the rational interval that decides a
            comparison between two exact reals.
        budget_nodes: Maximum number of expression node evaluations spent on
            a single refinement before giving up.
        birthday_bound: Largest birthday accepted by the recursive Conway
            oracle and by the toy-scale Dedekind limit oracle.
        proof_window: Largest ``n`` for which a closed-form partial sum is
            checked against the literal sum.
        riemann_window: Largest ``n`` for which a Riemann sum closed form is
            checked against the literal sum.
        witness_budget: Number of witnesses a gap membership predicate may
            draw from a section's class descriptions.
        stream_terms: Number of terms printed for an infinite stream.
        option_orders: Number of truncation orders ``n`` sampled when the
            options of a genetic function are listed.
        output_format: Either ``"text"`` or ``"json"``.
    """

    budget_width: Fraction = Fraction(1, 2**128)
    budget_nodes: int = 10**6
    birthday_bound: int = 8
    proof_window: int = 50
    riemann_window: int = 20
    witness_budget: int = 64
    stream_terms: int = 8
    option_orders: int = 3
    output_format: str = "text"

    def __post_init__(self) -> None:
        if self.budget_width <= 0:
            raise ValueError("budget_width must be positive")
        for name in (
            "budget_nodes",
            "birthday_bound",
            "witness_budget",
            "stream_terms",
            "option_orders",
        ):
            if getattr(self, name) < 1:
                raise ValueError("%s must be at least 1" % name)
        if self.proof_window < 0 or self.riemann_window < 1:
            raise ValueError("proof windows must be non-negative")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                "output_format must be one of %s" % ", ".join(OUTPUT_FORMATS)
            )

    def replace(self, **changes: Any) -> Settings:
        """Return a copy of these settings with ``changes`` applied."""
        return dataclasses.replace(self, **changes)


DEFAULT_SETTINGS = Settings()
