# SPDX-License-Identifier: Apache-2.0

from collections import defaultdict
from itertools import product
from types import MappingProxyType

from pyrota.core.errors import CarrierViolation, ModeMismatch
from pyrota.algebra.scalar import ONE, ZERO, to_scalar, is_scalar, render_terms
from pyrota.algebra.monomial import check_mode
from pyrota.algebra.tensor import TensorElement, render_word, word_key

SQUARE = 'square'
COMODULE = 'comodule'
FREE = 'free'
POLICIES = (SQUARE, COMODULE, FREE)

LEG_SEPARATOR = '⊗'

class LegTensor:
  """
  Finite rational combination of tuples of tensor words, one word per leg.

  Keys are tuples of words, so a term of a three-leg element looks like
  ((a,), (1, b), (c,)). Every leg shares the base mode.
  """

  __slots__ = ('_mode', '_terms', '_arity')

  def __init__(self, mode, terms=None, arity=2):
    self._mode = check_mode(mode)
    self._arity = arity
    clean = {}
    for key, coeff in (terms or {}).items():
      key = tuple( tuple(w) for w in key )
      if len(key) != arity:
        raise ValueError('Expected {} legs, got {}'.format(arity, len(key)))
      coeff = to_scalar(coeff)
      if coeff:
        for word in key:
          for letter in word:
            if letter.mode != mode:
              raise ModeMismatch('Letter {} is not in {} mode'.format(letter, mode))
        clean[key] = coeff
    self._terms = clean

  @classmethod
  def from_tensors(cls, *tensors):
    """
    The tensor product X1 ⊗ X2 ⊗ ... of TensorElements.
    """
    mode = tensors[0].mode
    acc = defaultdict(lambda: ZERO)
    for choice in product(*[ x.terms.items() for x in tensors ]):
      coeff = ONE
      for _, c in choice:
        coeff *= c
      acc[tuple( w for w, _ in choice )] += coeff
    return cls._build(mode, acc, len(tensors))

  @classmethod
  def _build(cls, mode, terms, arity):
    return LegTensor(mode, terms, arity)

  @property
  def mode(self):
    return self._mode

  @property
  def arity(self):
    return self._arity

  @property
  def terms(self):
    return MappingProxyType(self._terms)

  @property
  def is_zero(self):
    return not self._terms

  def keys(self):
    return sorted(self._terms, key=lambda k: tuple( word_key(w) for w in k ))

  def items(self):
    return [ (k, self._terms[k]) for k in self.keys() ]

  def coefficient(self, *words):
    return self._terms.get(tuple( tuple(w) for w in words ), ZERO)

  def _like(self, terms, keep_policy=True):
    return LegTensor(self._mode, terms, self._arity)

  def _check(self, other):
    if not isinstance(other, LegTensor):
      raise TypeError('Expected a leg tensor, got {}'.format(type(other).__name__))
    if other._mode != self._mode or other._arity != self._arity:
      raise ModeMismatch('Cannot combine leg tensors of different mode or arity')

  def __add__(self, other):
    self._check(other)
    acc = dict(self._terms)
    for key, coeff in other._terms.items():
      acc[key] = acc.get(key, ZERO) + coeff
    return self._like(acc)

  def __neg__(self):
    return self.scale(-ONE)

  def __sub__(self, other):
    return self + (-other)

  def scale(self, k):
    k = to_scalar(k)
    return self._like({ key: c * k for key, c in self._terms.items() })

  def __mul__(self, other):
    if is_scalar(other):
      return self.scale(other)
    return NotImplemented

  __rmul__ = __mul__

  def leg(self, key, index):
    """
    The word in leg index of key as a TensorElement.
    """
    return TensorElement(self._mode, {key[index]: ONE})

  def map_leg(self, index, fn):
    """
    Applies the linear map fn (TensorElement -> TensorElement) to one leg.
    """
    acc = defaultdict(lambda: ZERO)
    for key, coeff in self._terms.items():
      for word, c in fn(self.leg(key, index)).terms.items():
        acc[key[:index] + (word,) + key[index + 1:]] += coeff * c
    return self._like(acc, keep_policy=False)

  def expand_leg(self, index, fn):
    """
    Replaces leg index by fn(word), a LegTensor, raising the arity accordingly.
    """
    acc = defaultdict(lambda: ZERO)
    arity = None
    for key, coeff in self._terms.items():
      image = fn(self.leg(key, index))
      arity = self._arity - 1 + image.arity
      for sub, c in image.terms.items():
        acc[key[:index] + sub + key[index + 1:]] += coeff * c
    return LegTensor(self._mode, acc, arity or self._arity + 1)

  def contract_leg(self, index, fn):
    """
    Applies a linear functional fn (TensorElement -> Fraction) to one leg, dropping it.
    """
    acc = defaultdict(lambda: ZERO)
    for key, coeff in self._terms.items():
      acc[key[:index] + key[index + 1:]] += coeff * fn(self.leg(key, index))
    if self._arity == 2:
      return TensorElement(self._mode, { key[0]: c for key, c in acc.items() })
    return LegTensor(self._mode, acc, self._arity - 1)

  def legwise(self, other, *muls):
    """
    Legwise product: term (x1, x2, ...) times (y1, y2, ...) gives mul_i(x_i, y_i) in leg i.
    """
    self._check(other)
    acc = defaultdict(lambda: ZERO)
    for (k1, c1), (k2, c2) in product(self._terms.items(), other._terms.items()):
      legs = [ mul(self.leg(k1, i), other.leg(k2, i)) for i, mul in enumerate(muls) ]
      for key, c in LegTensor.from_tensors(*legs).terms.items():
        acc[key] += c1 * c2 * c
    return self._like(acc, keep_policy=False)

  def __bool__(self):
    return bool(self._terms)

  def __eq__(self, other):
    if not isinstance(other, LegTensor):
      return NotImplemented
    return self._mode == other._mode and self._arity == other._arity and self._terms == other._terms

  __hash__ = None

  def __reduce__(self):
    return (LegTensor, (self._mode, self._terms, self._arity))

  def render(self):
    return render_terms([ (c, LEG_SEPARATOR.join( render_word(w) for w in k )) for k, c in self.items() ])

  def __repr__(self):
    return self.render()

class TwoLegElement(LegTensor):
  """
  Two-leg combination with a leg policy.

  'square' requires both legs in T+(A); 'comodule' additionally requires the
  right leg to be a length-1 word, i.e. an element of H; 'free' checks nothing.
  """

  __slots__ = ('_policy',)

  def __init__(self, mode, terms=None, policy=FREE):
    super().__init__(mode, terms, arity=2)
    if policy not in POLICIES:
      raise ValueError('Unknown leg policy {}'.format(policy))
    self._policy = policy
    if policy != FREE:
      for left, right in self._terms:
        if not left or not right:
          raise CarrierViolation('Both legs of a {} element must be non-empty words'.format(policy))
        if policy == COMODULE and len(right) != 1:
          raise CarrierViolation('The right leg of a comodule element must be a length-1 word, got {}'.format(render_word(right)))

  @classmethod
  def from_pair(cls, X, Y, policy=FREE):
    return cls(X.mode, LegTensor.from_tensors(X, Y).terms, policy=policy)

  @classmethod
  def _build(cls, mode, terms, arity):
    if arity == 2:
      return TwoLegElement(mode, terms)
    return LegTensor(mode, terms, arity)

  @property
  def policy(self):
    return self._policy

  def with_policy(self, policy):
    return TwoLegElement(self._mode, self._terms, policy=policy)

  def _like(self, terms, keep_policy=True):
    return TwoLegElement(self._mode, terms, policy=self._policy if keep_policy else FREE)

  def __reduce__(self):
    return (TwoLegElement, (self._mode, self._terms, self._policy))
