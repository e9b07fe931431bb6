# -*- coding: utf-8 -*-
#
# reilly_verify documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('.'))
sys.path.insert(0, os.path.abspath(os.path.join("..", "..")))

# on_rtd is whether we are on readthedocs.org
on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

import reilly_verify  # noqa


# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.autosummary',
    'numpydoc']

numpydoc_class_members_toctree = False

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'reilly_verify'
copyright = u'2017, JuanBC'
author = u'JuanBC'

version = reilly_verify.VERSION
release = version

language = None

exclude_patterns = ['_build']

pygments_style = 'sphinx'

todo_include_todos = False


# -- Options for HTML output ----------------------------------------------

html_theme = "alabaster"

html_theme_options = {
    'logo_name': True,
}

htmlhelp_basename = 'reilly_verifydoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'reilly_verify.tex', u'reilly_verify Documentation',
     u'JuanBC', 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'reilly_verify', u'reilly_verify Documentation',
     [author], 1)
]


# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (master_doc, 'reilly_verify', u'reilly_verify Documentation',
     author, 'reilly_verify',
     'Numerical verification of eigenvalue upper bounds.',
     'Miscellaneous'),
]

intersphinx_mapping = {'https://docs.python.org/': None}
