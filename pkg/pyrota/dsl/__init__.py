# SPDX-License-Identifier: Apache-2.0

from .parser import parse_expr
from .evaluator import Evaluator, evaluate
