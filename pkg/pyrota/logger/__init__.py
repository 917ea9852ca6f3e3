# SPDX-License-Identifier: Apache-2.0

from pyrota.logger.abstract import Logger
from pyrota.logger.file import FileLogger
