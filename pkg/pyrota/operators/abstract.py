# SPDX-License-Identifier: Apache-2.0

from abc import ABC, abstractmethod

class Operator(ABC):
  """
  A named linear endomorphism evaluable on TensorElements.
  
  Subclasses either implement apply_word, which maps one basis word to a
  TensorElement and is extended linearly by apply, or override apply.
  """
  
  # Whether images of the operator always lie in T+(A)
  produces_plus = False
  
  @property
  @abstractmethod
  def name(self):
    pass
  
  def apply_word(self, word, mode):
    raise NotImplementedError('{} has no word-level rule'.format(self.name))
  
  def apply(self, x):
    return x.map_words(lambda w: self.apply_word(w, x.mode), plus=self.produces_plus or x.plus)
  
  def __call__(self, x):
    return self.apply(x)
  
  def power(self, n):
    return Composed(*([self] * n)) if n else IdentityOperator()
  
  def __repr__(self):
    return self.name

class IdentityOperator(Operator):
  
  @property
  def name(self):
    return 'id'
  
  def apply(self, x):
    return x

class Composed(Operator):
  """
  Composition f∘g∘..., applied right to left.
  """
  
  def __init__(self, *operators):
    self.operators = operators
  
  @property
  def name(self):
    return '∘'.join( op.name for op in self.operators )
  
  def apply(self, x):
    for op in reversed(self.operators):
      x = op.apply(x)
    return x
