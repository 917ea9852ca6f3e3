# SPDX-License-Identifier: Apache-2.0

from abc import ABC, abstractmethod
from functools import reduce

from pyrota.algebra.monomial import COMMUTATIVE
from pyrota.algebra.tensor import TensorElement
from pyrota import shuffle

class Ambient(ABC):
  """
  An associative algebra in which operator identities are evaluated.
  
  Subclasses supply the product, the unit and a short label used in reports.
  """
  
  plus = False
  
  @property
  @abstractmethod
  def label(self):
    pass
  
  @abstractmethod
  def mul(self, x, y):
    pass
  
  @abstractmethod
  def unit(self):
    pass
  
  def mul_all(self, *elements):
    return reduce(self.mul, elements)
  
  def power(self, x, n):
    result = self.unit()
    for _ in range(n):
      result = self.mul(result, x)
    return result
  
  def __repr__(self):
    return self.label

class TensorAmbient(Ambient):
  """
  (T(A), •^q) or, with plus set, (T+(A), •̄^q).
  
  Args:
    mode (str): Base mode of the words.
    kind (ProductKind): The shuffle-type product.
    plus (bool): Use the extended product on T+(A).
    engine (str): 'recursive' or 'combinatorial'.
  """
  
  def __init__(self, mode, kind, plus=False, engine=shuffle.RECURSIVE):
    self.mode = mode
    self.kind = kind
    self.plus = plus
    self.engine = engine
  
  @property
  def label(self):
    return '{}{}'.format(self.kind.label, '+' if self.plus else '')
  
  @property
  def is_commutative(self):
    return self.mode == COMMUTATIVE
  
  def mul(self, x, y):
    if self.plus:
      return shuffle.product_plus(self.kind, x, y, self.engine)
    return shuffle.product(self.kind, x, y, self.engine)
  
  def unit(self):
    if self.plus:
      return TensorElement.unit_word(self.mode)
    return TensorElement.empty(self.mode)
  
  def zero(self):
    return TensorElement.zero(self.mode, plus=self.plus)
  
  def embed(self, x):
    """
    Casts a TensorElement into this ambient's carrier.
    """
    return x.as_plus().require_plus() if self.plus else x.as_plain()
  
  def __eq__(self, other):
    return isinstance(other, TensorAmbient) and (self.mode, self.kind, self.plus) == (other.mode, other.kind, other.plus)
  
  def __hash__(self):
    return hash((self.mode, self.kind, self.plus))
