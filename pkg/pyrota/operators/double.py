# SPDX-License-Identifier: Apache-2.0

from pyrota.core.errors import UsageError
from pyrota.algebra.scalar import is_scalar, format_scalar
from pyrota.operators.ambient import Ambient

STAR_R = 'star_R'
STAR_N = 'star_N'
STAR_P = 'star_P'
FLAVORS = (STAR_R, STAR_N, STAR_P)

def double_product(flavor, x, y, ambient, operator, theta=None):
  """
  Operator-twisted product on an ambient algebra.
  
    star_R: R(x)y + xR(y) + xθy
    star_N: N(x)y + xN(y) - N(xy)
    star_P: P(x)y + xP(y) - xP(1)y
  
  theta may be a scalar or an element of the ambient algebra.
  """
  mul = ambient.mul
  twisted = mul(operator(x), y) + mul(x, operator(y))
  if flavor == STAR_R:
    if theta is None:
      raise UsageError('star_R needs a weight')
    if is_scalar(theta):
      return twisted + mul(x, y).scale(theta)
    return twisted + mul(mul(x, theta), y)
  if flavor == STAR_N:
    return twisted - operator(mul(x, y))
  if flavor == STAR_P:
    return twisted - mul(mul(x, operator(ambient.unit())), y)
  raise UsageError('Unknown double product "{}"'.format(flavor))

class DoubleAmbient(Ambient):
  """
  The ambient algebra re-equipped with a double product, e.g. A_R = (A, ∗_R).
  """
  
  def __init__(self, base, flavor, operator, theta=None):
    if flavor not in FLAVORS:
      raise UsageError('Unknown double product "{}"'.format(flavor))
    self.base = base
    self.flavor = flavor
    self.operator = operator
    self.theta = theta
    self.plus = base.plus
    self.mode = base.mode
  
  @property
  def label(self):
    weight = ''
    if self.flavor == STAR_R:
      weight = ',{}'.format(format_scalar(self.theta) if is_scalar(self.theta) else self.theta.render())
    return '{}[{}{}]({})'.format(self.flavor, self.operator.name, weight, self.base.label)
  
  def mul(self, x, y):
    return double_product(self.flavor, x, y, self.base, self.operator, self.theta)
  
  def unit(self):
    raise UsageError('{} has no unit'.format(self.label))
