# SPDX-License-Identifier: Apache-2.0

from .monomial import Monomial, COMMUTATIVE, NONCOMMUTATIVE
from .base import BaseAlgebra, BaseElement
from .tensor import TensorElement
from .legs import TwoLegElement
