# SPDX-License-Identifier: Apache-2.0

from collections import defaultdict
from itertools import product
from types import MappingProxyType

from pyrota.core.errors import CarrierViolation, ModeMismatch
from pyrota.algebra.scalar import ONE, ZERO, to_scalar, is_scalar, render_terms
from pyrota.algebra.monomial import Monomial, check_mode

EMPTY_WORD_TEXT = '1_K'

def word_key(word):
  return (len(word), tuple( m.sort_key for m in word ))

def render_word(word):
  if not word:
    return EMPTY_WORD_TEXT
  return '({})'.format('|'.join( m.render() for m in word ))

def is_unit_word(word):
  """
  True for the all-unit words (1|...|1) of positive length.
  """
  return bool(word) and all( m.is_unit for m in word )

class TensorElement:
  """
  Finite rational combination of tensor words.

  A word is a tuple of Monomial letters; the empty tuple is 1_K. When plus is
  set the element is asserted to live in T+(A), so every word must be non-empty.
  Equality compares the canonical maps only and ignores the plus flag.
  """

  __slots__ = ('_mode', '_terms', '_plus')

  def __init__(self, mode, terms=None, plus=False):
    self._mode = check_mode(mode)
    self._plus = bool(plus)
    clean = {}
    for word, coeff in (terms or {}).items():
      word = tuple(word)
      coeff = to_scalar(coeff)
      if not coeff:
        continue
      for letter in word:
        if letter.mode != mode:
          raise ModeMismatch('Letter {} is not in {} mode'.format(letter, mode))
      if plus and not word:
        raise CarrierViolation('The empty word 1_K does not lie in T+(A)')
      clean[word] = coeff
    self._terms = clean

  @classmethod
  def zero(cls, mode, plus=False):
    return cls(mode, plus=plus)

  @classmethod
  def empty(cls, mode, coeff=ONE):
    """
    The element coeff*1_K.
    """
    return cls(mode, {(): coeff})

  @classmethod
  def from_word(cls, word, coeff=ONE, mode=None, plus=None):
    word = tuple(word)
    if mode is None:
      if not word:
        raise ValueError('Mode is required for the empty word')
      mode = word[0].mode
    return cls(mode, {word: coeff}, plus=bool(word) if plus is None else plus)

  @classmethod
  def unit_word(cls, mode, n=1):
    """
    The all-unit word (1|...|1) of length n.
    """
    return cls(mode, {(Monomial.unit(mode),) * n: ONE}, plus=n > 0)

  @property
  def mode(self):
    return self._mode

  @property
  def plus(self):
    return self._plus

  @property
  def terms(self):
    return MappingProxyType(self._terms)

  @property
  def is_zero(self):
    return not self._terms

  @property
  def lengths(self):
    return sorted({ len(w) for w in self._terms })

  def words(self):
    return sorted(self._terms, key=word_key)

  def items(self):
    return [ (w, self._terms[w]) for w in self.words() ]

  def coefficient(self, word):
    return self._terms.get(tuple(word), ZERO)

  def as_plus(self):
    """
    Returns the same element flagged as a member of T+(A).
    """
    return TensorElement(self._mode, self._terms, plus=True)

  def as_plain(self):
    return TensorElement(self._mode, self._terms, plus=False)

  def require_plus(self):
    if () in self._terms:
      raise CarrierViolation('{} does not lie in T+(A): it has a 1_K component'.format(self.render()))
    return self

  def check_mode(self, other):
    if not isinstance(other, TensorElement):
      raise TypeError('Expected a TensorElement, got {}'.format(type(other).__name__))
    if other._mode != self._mode:
      raise ModeMismatch('Cannot combine {} and {} tensor elements'.format(self._mode, other._mode))

  def __add__(self, other):
    self.check_mode(other)
    acc = dict(self._terms)
    for word, coeff in other._terms.items():
      acc[word] = acc.get(word, ZERO) + coeff
    return TensorElement(self._mode, acc, plus=self._plus and other._plus)

  def __neg__(self):
    return self.scale(-ONE)

  def __sub__(self, other):
    return self + (-other)

  def scale(self, k):
    k = to_scalar(k)
    return TensorElement(self._mode, { w: c * k for w, c in self._terms.items() }, plus=self._plus)

  def __mul__(self, other):
    if is_scalar(other):
      return self.scale(other)
    return NotImplemented

  __rmul__ = __mul__

  def concat(self, other):
    self.check_mode(other)
    acc = defaultdict(lambda: ZERO)
    for (u, cu), (v, cv) in product(self._terms.items(), other._terms.items()):
      acc[u + v] += cu * cv
    return TensorElement(self._mode, acc, plus=self._plus or other._plus)

  def map_words(self, fn, plus=None):
    """
    Linear extension of fn, which maps a word to a TensorElement.
    """
    acc = defaultdict(lambda: ZERO)
    for word, coeff in self._terms.items():
      for w, c in fn(word)._terms.items():
        acc[w] += coeff * c
    return TensorElement(self._mode, acc, plus=self._plus if plus is None else plus)

  def map_letters(self, fn):
    """
    Applies fn letterwise, fn mapping a Monomial to a Monomial.
    """
    acc = defaultdict(lambda: ZERO)
    for word, coeff in self._terms.items():
      acc[tuple( fn(m) for m in word )] += coeff
    return TensorElement(self._mode, acc, plus=self._plus)

  def __bool__(self):
    return bool(self._terms)

  def __eq__(self, other):
    if not isinstance(other, TensorElement):
      return NotImplemented
    return self._mode == other._mode and self._terms == other._terms

  __hash__ = None

  def __reduce__(self):
    return (TensorElement, (self._mode, self._terms, self._plus))

  def render(self):
    return render_terms([ (c, render_word(w)) for w, c in self.items() ])

  def __repr__(self):
    return self.render()

def bilinear(X, Y, fn, plus=False):
  """
  Extends fn(u, v) -> TensorElement bilinearly over the words of X and Y.
  """
  X.check_mode(Y)
  acc = defaultdict(lambda: ZERO)
  for (u, cu), (v, cv) in product(X.terms.items(), Y.terms.items()):
    for w, c in fn(u, v).terms.items():
      acc[w] += cu * cv * c
  return TensorElement(X.mode, acc, plus=plus)

def word_normalize(raw, mode=None):
  """
  Expands a sequence of base elements (one per slot) multilinearly into a TensorElement.
  """
  raw = list(raw)
  if not raw:
    if mode is None:
      raise ValueError('Mode is required to normalize an empty slot sequence')
    return TensorElement.empty(mode)
  mode = raw[0].mode
  acc = defaultdict(lambda: ZERO)
  for choice in product(*[ x.terms.items() for x in raw ]):
    coeff = ONE
    for _, c in choice:
      coeff *= c
    acc[tuple( m for m, _ in choice )] += coeff
  return TensorElement(mode, acc)

def linear_combine(pairs, mode=None):
  pairs = list(pairs)
  if not pairs:
    if mode is None:
      raise ValueError('Mode is required to combine an empty sequence')
    return TensorElement.zero(mode)
  result = TensorElement.zero(pairs[0][1].mode, plus=all( x.plus for _, x in pairs ))
  for coeff, element in pairs:
    result = result + element.scale(coeff)
  return result

def tensor_concat(X, Y):
  return X.concat(Y)

def grade_decompose(X):
  parts = defaultdict(dict)
  for word, coeff in X.terms.items():
    parts[len(word)][word] = coeff
  return { n: TensorElement(X.mode, parts[n], plus=n > 0 and X.plus) for n in sorted(parts) }
