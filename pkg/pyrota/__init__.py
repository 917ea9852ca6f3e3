# SPDX-License-Identifier: Apache-2.0

from .core.pyrota import PyRota
from .version import __version__
