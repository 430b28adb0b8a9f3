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

from setuptools import setup

about = {}
with open("surreal_calc/_about.py") as fp:
    exec(fp.read(), about)


setup(
    name="surreal-calc",
    version=about["__version__"],
    description="Exact limits, sums and integrals on the surreal numbers",
    packages=["surreal_calc"],
    install_requires=["sympy>=1.14,<1.15", "mpmath>=1.3,<1.4", "prompt_toolkit>=3.0"],
    extras_require={
        "tests": ["pytest"],
        "docs": ["sphinx", "sphinx_rtd_theme"],
    },
    python_requires=">=3.9",
    entry_points={"console_scripts": ["surreal-calc = surreal_calc.cli:main"]},
    package_data={"surreal_calc": ["py.typed"]},
)
