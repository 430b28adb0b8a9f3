#
# surreal-calc documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

sys.path.insert(0, os.path.abspath(".."))

from surreal_calc import __version__

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.githubpages",
]

templates_path = ["templates"]
source_suffix = ".rst"
root_doc = "index"

# General information about the project.
project = "surreal-calc"
copyright = "2026, The surreal-calc Authors"

# The short X.Y version.
version = ".".join(__version__.split(".")[:2])
# The full version, including alpha/beta/rc tags.
release = __version__

exclude_patterns = []

# The reST default role (used for this markup: `text`) to use for all
# documents.
default_role = "py:obj"

pygments_style = "sphinx"

# A list of ignored prefixes for module index sorting.
modindex_common_prefix = ["surreal_calc."]

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_static_path = []
htmlhelp_basename = "SurrealCalcdoc"

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (
        "index",
        "surreal-calc.tex",
        "surreal-calc Documentation",
        "The surreal-calc Authors",
        "manual",
    ),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ("cli", "surreal-calc", "Surreal number calculator", ["The surreal-calc Authors"], 1)
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "sympy": ("https://docs.sympy.org/latest", None),
}

viewcode_import = False

autodoc_typehints = "none"
