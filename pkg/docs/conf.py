# -*- coding: utf-8 -*-
#
# wreathembed documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

from wreathembed import __version__

extensions = []
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'wreathembed'
version = __version__
release = __version__

language = None
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'wreathembeddoc'

man_pages = [
    (master_doc, 'wreathembed', u'wreathembed Documentation', [], 1)
]
