# SPDX-License-Identifier: Apache-2.0

from .structure import LeftShiftTridend, QuasiShuffleTridend
