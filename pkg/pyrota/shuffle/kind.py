# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass
from fractions import Fraction

from pyrota.core.errors import UsageError
from pyrota.algebra.scalar import ZERO, ONE, to_scalar, format_scalar
from pyrota.algebra.monomial import Monomial

SHUFFLE = 'sh'
QUASI_SHUFFLE = 'qsh'
RIGHT_SHIFT = 'rsh'
LEFT_SHIFT = 'lsh'
TAGS = (SHUFFLE, QUASI_SHUFFLE, RIGHT_SHIFT, LEFT_SHIFT)

@dataclass(frozen=True)
class ProductKind:
  """
  Selects one of the four shuffle-type products.
  
  Attributes:
    tag (str): 'sh', 'qsh', 'rsh' or 'lsh'.
    theta (Fraction): Contraction weight; only meaningful for 'qsh' and forced to 0 otherwise.
  """
  tag: str
  theta: Fraction = ZERO
  
  def __post_init__(self):
    if self.tag not in TAGS:
      raise UsageError('Unknown product kind "{}" (expected one of {})'.format(self.tag, ', '.join(TAGS)))
    theta = to_scalar(self.theta) if self.tag == QUASI_SHUFFLE else ZERO
    object.__setattr__(self, 'theta', theta)
  
  @classmethod
  def parse(cls, tag, theta=None):
    return cls(tag, ONE if theta is None else to_scalar(theta))
  
  @property
  def label(self):
    if self.tag == QUASI_SHUFFLE:
      return 'qsh({})'.format(format_scalar(self.theta))
    return self.tag
  
  @property
  def has_contractions(self):
    return self.tag in (RIGHT_SHIFT, LEFT_SHIFT) or (self.tag == QUASI_SHUFFLE and self.theta != 0)
  
  def contract(self, u, v):
    """
    Contraction of the adjacent letters u (left word) and v (right word).
    
    Returns:
      (coefficient, letters) or None when the kind has no contraction.
    """
    if not self.has_contractions:
      return None
    uv = u * v
    if self.tag == QUASI_SHUFFLE:
      return (self.theta, (uv,))
    unit = Monomial.unit(uv.mode)
    if self.tag == RIGHT_SHIFT:
      return (-ONE, (unit, uv))
    return (-ONE, (uv, unit))
  
  def __str__(self):
    return self.label

SH = ProductKind(SHUFFLE)
RSH = ProductKind(RIGHT_SHIFT)
LSH = ProductKind(LEFT_SHIFT)
QSH_ONE = ProductKind(QUASI_SHUFFLE, ONE)

def qsh(theta):
  return ProductKind(QUASI_SHUFFLE, theta)
