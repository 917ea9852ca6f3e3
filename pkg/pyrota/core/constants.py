# SPDX-License-Identifier: Apache-2.0

STATUS_COMPLETED = 'C'
STATUS_PENDING   = 'P'
STATUS_FAILED    = 'F'

EXIT_SUCCESS   = 0
EXIT_FAILURE   = 1
EXIT_USAGE     = 2
EXIT_INTERRUPT = 4
EXIT_UNKNOWN   = 99

SUITE_ALL = 'all'

COMMANDS = ('eval', 'check', 'spitzer', 'primitives', 'decompose')
