#!/usr/bin/python3

# SPDX-License-Identifier: Apache-2.0

import os
from setuptools import setup

# Read the version without importing pyrota, whose dependencies may not be installed yet
about = {}
with open(os.path.join(os.path.dirname(os.path.abspath(__file__)), 'pyrota', 'version.py')) as version_file:
  exec(version_file.read(), about)

setup(
  name = 'python-rota-baxter',
  version = about['__version__'],
  python_requires = '>=3.8',
  install_requires = [
    'sympy>=1.9',
    'pyparsing>=3.0',
    'more-itertools>=8.0'
  ],
  extras_require = {
    'test': ['pytest>=7.0', 'hypothesis>=6.0']
  },
  packages = ['pyrota', 'pyrota.algebra', 'pyrota.shuffle', 'pyrota.operators', 'pyrota.dendriform', 'pyrota.bialgebra', 'pyrota.dsl', 'pyrota.check', 'pyrota.core', 'pyrota.logger', 'pyrota.serde' ],
  license = 'Apache 2.0',
  long_description = 'Exact symbolic kernel and command line checker for free Rota-Baxter, Nijenhuis and TD-algebras.',
  entry_points = {
    'console_scripts': ['pyrota=pyrota.cli:main']
  }
)
