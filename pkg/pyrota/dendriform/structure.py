# SPDX-License-Identifier: Apache-2.0

from abc import ABC, abstractmethod

from pyrota.core.errors import CarrierViolation, UsageError
from pyrota.algebra.monomial import COMMUTATIVE
from pyrota.algebra.tensor import TensorElement, bilinear, render_word
from pyrota import shuffle
from pyrota.shuffle import LSH, QSH_ONE
from pyrota.operators.ambient import TensorAmbient
from pyrota.operators.shift import RightShift

PREC = 'prec'
SUCC = 'succ'
DOT = 'dot'
STAR = 'star'
OPERATIONS = (PREC, SUCC, DOT, STAR)

PLUS_LSH = 'plus_lsh'
QONE = 'qone'

class TridendStructure(ABC):
  """
  Three operations prec, succ and dot on a carrier, with star their sum.
  """
  
  def __init__(self, mode, engine=shuffle.RECURSIVE):
    self.mode = mode
    self.engine = engine
  
  @property
  @abstractmethod
  def carrier(self):
    pass
  
  @property
  def is_commutative(self):
    return self.mode == COMMUTATIVE
  
  @abstractmethod
  def validate(self, x):
    pass
  
  @abstractmethod
  def _prec(self, x, y):
    pass
  
  @abstractmethod
  def _succ(self, x, y):
    pass
  
  @abstractmethod
  def _dot(self, x, y):
    pass
  
  def prec(self, x, y):
    return self._prec(self.validate(x), self.validate(y))
  
  def succ(self, x, y):
    return self._succ(self.validate(x), self.validate(y))
  
  def dot(self, x, y):
    return self._dot(self.validate(x), self.validate(y))
  
  def star(self, x, y):
    return self.prec(x, y) + self.succ(x, y) + self.dot(x, y)
  
  def apply(self, op, x, y):
    if op not in OPERATIONS:
      raise UsageError('Unknown tridendriform operation "{}"'.format(op))
    return getattr(self, op)(x, y)
  
  def __repr__(self):
    return self.carrier

class LeftShiftTridend(TridendStructure):
  """
  (T+(A), ≺, ≻, •) built from the left-shift shuffle:
  
    X ≺ Y = X •̄ P(Y)
    X ≻ Y = P(X) •̄ Y
    X • Y = -X •̄ (1|1) •̄ Y
  
  dot_sign exists so that the sign-flipped structure can serve as a negative control.
  """
  
  def __init__(self, mode, engine=shuffle.RECURSIVE, dot_sign=-1):
    super().__init__(mode, engine)
    self.ambient = TensorAmbient(mode, LSH, plus=True, engine=engine)
    self.operator = RightShift()
    self.dot_sign = dot_sign
  
  @property
  def carrier(self):
    return PLUS_LSH if self.dot_sign == -1 else '{}[dot{:+d}]'.format(PLUS_LSH, self.dot_sign)
  
  def validate(self, x):
    return self.ambient.embed(x)
  
  def sandwich(self):
    return self.operator(self.ambient.unit())
  
  def _prec(self, x, y):
    return self.ambient.mul(x, self.operator(y))
  
  def _succ(self, x, y):
    return self.ambient.mul(self.operator(x), y)
  
  def _dot(self, x, y):
    return self.ambient.mul_all(x, self.sandwich(), y).scale(self.dot_sign)

class QuasiShuffleTridend(TridendStructure):
  """
  The weight-1 quasi-shuffle structure on words with non-unit letters:
  
    aX ≺ bY = a(X •¹ bY)
    aX ≻ bY = b(aX •¹ Y)
    aX • bY = [a;b](X •¹ Y)
  """
  
  kind = QSH_ONE
  
  @property
  def carrier(self):
    return QONE
  
  def validate(self, x):
    for word in x.terms:
      if not word:
        raise CarrierViolation('1_K is not in the augmentation ideal')
      if any( m.is_unit for m in word ):
        raise CarrierViolation('Word {} has a unit letter; letters must lie in the augmentation ideal'.format(render_word(word)))
    return x.as_plus()
  
  def product(self, x, y):
    """
    The weight-1 quasi-shuffle •¹ itself.
    """
    return shuffle.product(self.kind, x, y, self.engine)
  
  def _prefixed(self, head, u, v):
    tail = shuffle.product(self.kind, TensorElement.from_word(u, mode=self.mode), TensorElement.from_word(v, mode=self.mode), self.engine)
    return TensorElement(self.mode, { (head,) + w: c for w, c in tail.terms.items() }, plus=True)
  
  def _prec(self, x, y):
    return bilinear(x, y, lambda u, v: self._prefixed(u[0], u[1:], v), plus=True)
  
  def _succ(self, x, y):
    return bilinear(x, y, lambda u, v: self._prefixed(v[0], u, v[1:]), plus=True)
  
  def _dot(self, x, y):
    return bilinear(x, y, lambda u, v: self._prefixed(u[0] * v[0], u[1:], v[1:]), plus=True)

STRUCTURES = {
  PLUS_LSH: LeftShiftTridend,
  QONE: QuasiShuffleTridend
}

def tridend_structure(carrier, mode, engine=shuffle.RECURSIVE):
  if carrier not in STRUCTURES:
    raise UsageError('Unknown tridendriform carrier "{}"'.format(carrier))
  return STRUCTURES[carrier](mode, engine)

def tridend_apply(s, op, x, y):
  return s.apply(op, x, y)
