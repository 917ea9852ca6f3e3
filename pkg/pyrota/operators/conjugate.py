# SPDX-License-Identifier: Apache-2.0

from pyrota.core.errors import UsageError
from pyrota.algebra.scalar import to_scalar, format_scalar
from pyrota.operators.abstract import Operator

RB_TILDE = 'rb_tilde'
NIJ_TILDE = 'nij_tilde'
TD_TILDE = 'td_tilde'
FLAVORS = (RB_TILDE, NIJ_TILDE, TD_TILDE)

class Conjugate(Operator):
  """
  Conjugate of an operator.
  
    rb_tilde:  R~(X) = -θX - R(X)
    nij_tilde: N~(X) = X - N(X)
    td_tilde:  P~(X) = P(1)X - P(X), the product taken in the ambient
  
  Args:
    base (Operator): The operator being conjugated.
    flavor (str): One of FLAVORS.
    ambient (Ambient): Needed by td_tilde for P(1) and the product.
    theta (Fraction): Weight for rb_tilde.
  """
  
  def __init__(self, base, flavor, ambient=None, theta=None):
    if flavor not in FLAVORS:
      raise UsageError('Unknown conjugate flavor "{}"'.format(flavor))
    if flavor == RB_TILDE and theta is None:
      raise UsageError('rb_tilde needs a scalar weight')
    if flavor == TD_TILDE and ambient is None:
      raise UsageError('td_tilde needs the ambient algebra to compute P(1)')
    self.base = base
    self.flavor = flavor
    self.ambient = ambient
    self.theta = None if theta is None else to_scalar(theta)
  
  @property
  def name(self):
    if self.flavor == RB_TILDE:
      return 'R~[{}]({})'.format(format_scalar(self.theta), self.base.name)
    return '{}~({})'.format('N' if self.flavor == NIJ_TILDE else 'P', self.base.name)
  
  def apply(self, x):
    if self.flavor == RB_TILDE:
      return x.scale(-self.theta) - self.base(x)
    if self.flavor == NIJ_TILDE:
      return x - self.base(x)
    return self.ambient.mul(self.base(self.ambient.unit()), x) - self.base(x)
