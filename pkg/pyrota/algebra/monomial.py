# SPDX-License-Identifier: Apache-2.0

from collections import Counter

from pyrota.core.errors import ModeMismatch, UsageError

COMMUTATIVE = 'comm'
NONCOMMUTATIVE = 'noncomm'
MODES = (COMMUTATIVE, NONCOMMUTATIVE)

def check_mode(mode):
  if mode not in MODES:
    raise UsageError('Unknown base mode "{}" (expected one of {})'.format(mode, ', '.join(MODES)))
  return mode

class Monomial:
  """
  A basis monomial of the base algebra.

  In commutative mode the key is a tuple of (generator, exponent) pairs sorted
  by generator name. In noncommutative mode the key is the generator sequence.
  The unit monomial has the empty key in both modes.
  """

  __slots__ = ('_mode', '_key', '_letters')

  def __init__(self, mode, key=()):
    self._mode = check_mode(mode)
    self._key = tuple(key)
    if mode == COMMUTATIVE:
      self._letters = tuple( name for name, exp in self._key for _ in range(exp) )
    else:
      self._letters = self._key

  @classmethod
  def unit(cls, mode):
    return cls(mode, ())

  @classmethod
  def generator(cls, mode, name):
    return cls(mode, ((name, 1),) if mode == COMMUTATIVE else (name,))

  @classmethod
  def from_letters(cls, mode, names):
    """
    Builds the monomial whose expanded generator sequence is names.
    """
    if check_mode(mode) == COMMUTATIVE:
      return cls(mode, sorted(Counter(names).items()))
    return cls(mode, tuple(names))

  @classmethod
  def parse(cls, mode, text):
    """
    Reads the canonical text form: 'a^2*b', 'a*b*a' or '1'.
    """
    text = text.strip()
    if text == '1':
      return cls.unit(mode)
    names = []
    for factor in text.split('*'):
      name, _, exp = factor.strip().partition('^')
      names.extend([name.strip()] * (int(exp) if exp else 1))
    return cls.from_letters(mode, names)

  @property
  def mode(self):
    return self._mode

  @property
  def key(self):
    return self._key

  @property
  def letters(self):
    return self._letters

  @property
  def degree(self):
    return len(self._letters)

  @property
  def is_unit(self):
    return not self._key

  @property
  def generators(self):
    return set(self._letters)

  @property
  def sort_key(self):
    return (len(self._letters), self._letters)

  def substitute(self, pairing):
    """
    Renames generators through pairing, reversing the sequence in noncommutative mode.
    """
    names = [ pairing.get(x, x) for x in self._letters ]
    if self._mode == NONCOMMUTATIVE:
      names.reverse()
    return Monomial.from_letters(self._mode, names)

  def render(self):
    if self.is_unit:
      return '1'
    if self._mode == COMMUTATIVE:
      return '*'.join( name if exp == 1 else '{}^{}'.format(name, exp) for name, exp in self._key )
    return '*'.join(self._key)

  def __mul__(self, other):
    if not isinstance(other, Monomial):
      return NotImplemented
    if other._mode != self._mode:
      raise ModeMismatch('Cannot multiply {} monomial by {} monomial'.format(self._mode, other._mode))
    if self._mode == COMMUTATIVE:
      exps = Counter(dict(self._key))
      exps.update(dict(other._key))
      return Monomial(self._mode, sorted(exps.items()))
    return Monomial(self._mode, self._key + other._key)

  def __pow__(self, n):
    result = Monomial.unit(self._mode)
    for _ in range(n):
      result = result * self
    return result

  def __eq__(self, other):
    return isinstance(other, Monomial) and self._mode == other._mode and self._key == other._key

  def __lt__(self, other):
    return self.sort_key < other.sort_key

  def __hash__(self):
    return hash((self._mode, self._key))

  def __reduce__(self):
    return (Monomial, (self._mode, self._key))

  def __repr__(self):
    return self.render()
