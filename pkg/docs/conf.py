# Sphinx configuration for cavity-memory.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import datetime
from importlib import metadata

project = 'cavity-memory'
copyright = f'{datetime.date.today().year}, cavity-memory developers'
author = 'cavity-memory developers'
release = metadata.version('cavity-memory')
version = '.'.join(release.split('.')[:2])
master_doc = 'index'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.intersphinx',
    'sphinx_copybutton',
]
autodoc_typehints = 'description'
autodoc_member_order = 'bysource'
autodoc_default_options = {
    'undoc-members': False,
    'show-inheritance': True,
}
autodoc_type_aliases = {
    'Times': 'cavity_memory.api.protocols.waveform.Times',
}
intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}

html_theme = 'furo'
html_title = f'cavity-memory {release}'
