# SPDX-License-Identifier: Apache-2.0

from collections import defaultdict
from itertools import product

from pyrota.algebra.scalar import ZERO
from pyrota.algebra.tensor import TensorElement, is_unit_word
from pyrota.algebra.legs import TwoLegElement, SQUARE
from pyrota import shuffle
from pyrota.shuffle import RSH
from pyrota.operators.abstract import Operator
from pyrota.operators.ambient import Ambient
from pyrota.operators.shift import RightShift

def vanishes(x1, x2, y1, y2):
  """
  True when (x1⊗x2) ⨿ (y1⊗y2) is zero: a non-unit right leg meets a
  (non-unit, unit) pair, or a (non-unit, unit) pair meets a non-unit right leg.
  A leg counts as unit when it is an all-unit word.
  """
  if not is_unit_word(x2) and not is_unit_word(y1) and is_unit_word(y2):
    return True
  if not is_unit_word(x1) and is_unit_word(x2) and not is_unit_word(y2):
    return True
  return False

def amalg_product(x, y, kind=RSH, engine=shuffle.RECURSIVE):
  """
  The unit-sensitive product ⨿ on the tensor square of T+(A): componentwise
  •̄^q except on the vanishing leg patterns.
  """
  x = x.with_policy(SQUARE)
  y = y.with_policy(SQUARE)
  mode = x.mode
  acc = defaultdict(lambda: ZERO)
  for ((x1, x2), cx), ((y1, y2), cy) in product(x.terms.items(), y.terms.items()):
    if vanishes(x1, x2, y1, y2):
      continue
    left = shuffle.product_plus(kind, TensorElement(mode, {x1: 1}), TensorElement(mode, {y1: 1}), engine)
    right = shuffle.product_plus(kind, TensorElement(mode, {x2: 1}), TensorElement(mode, {y2: 1}), engine)
    for (w1, c1), (w2, c2) in product(left.terms.items(), right.terms.items()):
      acc[(w1, w2)] += cx * cy * c1 * c2
  return TwoLegElement(mode, acc, policy=SQUARE)

class SquareAmbient(Ambient):
  """
  (T+(A) ⊗ T+(A), ⨿) with unit (1)⊗(1).
  """
  
  plus = True
  
  def __init__(self, mode, kind=RSH, engine=shuffle.RECURSIVE):
    self.mode = mode
    self.kind = kind
    self.engine = engine
  
  @property
  def label(self):
    return 'amalg({})'.format(self.kind.label)
  
  def mul(self, x, y):
    return amalg_product(x, y, self.kind, self.engine)
  
  def unit(self):
    unit = TensorElement.unit_word(self.mode)
    return TwoLegElement.from_pair(unit, unit, policy=SQUARE)

class Sandwich(Operator):
  """
  P_A ⊗ id on the tensor square: prepends the unit letter to the first leg.
  """
  
  @property
  def name(self):
    return 'P_A⊗id'
  
  def apply(self, x):
    return x.map_leg(0, RightShift()).with_policy(SQUARE)

def sandwich_apply(x):
  return Sandwich().apply(x)

def square_samples(algebra, names=None):
  """
  Square elements u⊗v with legs among (1), (1|1), (a) and (a|b).
  """
  names = names or algebra.names[:2]
  unit = algebra.unit_monomial()
  a = algebra.monomial(names[0])
  b = algebra.monomial(names[-1])
  legs = [ (unit,), (unit, unit), (a,), (a, b) ]
  return [ TwoLegElement(algebra.mode, {(u, v): 1}, policy=SQUARE) for u, v in product(legs, repeat=2) ]
