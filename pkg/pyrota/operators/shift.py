# SPDX-License-Identifier: Apache-2.0

from pyrota.algebra.monomial import Monomial
from pyrota.algebra.tensor import TensorElement
from pyrota.operators.abstract import Operator

class RightShift(Operator):
  """
  P_A: prepends the unit monomial, so P_A(U) = 1 ⊗ U and P_A(1_K) = (1).
  """
  
  produces_plus = True
  
  @property
  def name(self):
    return 'P_A'
  
  def apply_word(self, word, mode):
    return TensorElement(mode, {(Monomial.unit(mode),) + word: 1}, plus=True)

class LeftShift(Operator):
  """
  Q_A: appends the unit monomial, so Q_A(U) = U ⊗ 1 and Q_A(1_K) = (1).
  """
  
  produces_plus = True
  
  @property
  def name(self):
    return 'Q_A'
  
  def apply_word(self, word, mode):
    return TensorElement(mode, {word + (Monomial.unit(mode),): 1}, plus=True)

class LetterShift(Operator):
  """
  P^(u): prepends the fixed letter u.
  """
  
  produces_plus = True
  
  def __init__(self, letter):
    self.letter = letter
  
  @property
  def name(self):
    return 'P^({})'.format(self.letter.render())
  
  def apply_word(self, word, mode):
    return TensorElement(mode, {(self.letter,) + word: 1}, plus=True)
