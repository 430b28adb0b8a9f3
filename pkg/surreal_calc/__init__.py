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

"""This package provides exact calculus on the surreal numbers.

`surreal_calc.surreal` implements surreal numbers in Conway normal form, with
genetic forms, birthdays and the simplest number between two sets.
`surreal_calc.gaps` describes the Dedekind sections of the surreal line that
no number realizes.  `surreal_calc.transcend` evaluates the genetic
arctangent, logarithm and exponential.

On top of those, `surreal_calc.limits` takes limits of On-length sequences
and of functions, and `surreal_calc.sumint` extends sums and Riemann
integrals to ordinal bounds by extrapolating their closed forms.
`surreal_calc.cli` puts a calculator language in front of all of them.
"""

from ._about import __version__

__all__ = ["__version__"]
