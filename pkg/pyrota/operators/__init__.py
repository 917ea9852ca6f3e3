# SPDX-License-Identifier: Apache-2.0

from .abstract import Operator
from .ambient import Ambient, TensorAmbient
from .shift import RightShift, LeftShift, LetterShift
from .report import CheckReport
