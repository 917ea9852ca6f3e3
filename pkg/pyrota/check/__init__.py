# SPDX-License-Identifier: Apache-2.0

from .abstract import Check, FunctionCheck
