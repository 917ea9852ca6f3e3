# SPDX-License-Identifier: Apache-2.0

import random

from itertools import product

from pyrota.algebra.tensor import TensorElement

class SamplePolicy:
  """
  Exhaustive-then-random sample tuples of basis words.
  
  The exhaustive part takes every tuple of words up to max_len (triple_len for
  arity 3 and above) over the alphabet, which defaults to the unit letter and
  the first two generators. The random part draws random_samples tuples with
  word length up to random_len and letters of degree up to 2, from a
  random.Random seeded with seed, so identical settings give identical samples.
  
  Args:
    algebra (BaseAlgebra): Source of generators and mode.
    plus (bool): Draw from T+(A), i.e. skip the empty word.
    letters (list): Explicit alphabet for both parts.
  """
  
  def __init__(self, algebra, plus=False, max_len=3, random_len=4, random_samples=200, seed=42, letters=None, triple_len=None):
    self.algebra = algebra
    self.plus = plus
    self.max_len = max_len
    self.random_len = random_len
    self.random_samples = random_samples
    self.seed = seed
    self.triple_len = triple_len if triple_len is not None else max(1, max_len - 1)
    self.letters = list(letters) if letters is not None else None
  
  def derive(self, **changes):
    params = {
      'algebra': self.algebra, 'plus': self.plus, 'max_len': self.max_len,
      'random_len': self.random_len, 'random_samples': self.random_samples,
      'seed': self.seed, 'letters': self.letters, 'triple_len': self.triple_len
    }
    params.update(changes)
    return SamplePolicy(**params)
  
  @property
  def alphabet(self):
    if self.letters is not None:
      return self.letters
    return [ self.algebra.unit_monomial() ] + [ self.algebra.monomial(x) for x in self.algebra.names[:2] ]
  
  @property
  def random_alphabet(self):
    if self.letters is not None:
      return self.letters
    return [ self.algebra.unit_monomial() ] + self.algebra.monomials_up_to(2)
  
  def words(self, max_len):
    start = 1 if self.plus else 0
    return [ word for n in range(start, max_len + 1) for word in product(self.alphabet, repeat=n) ]
  
  def element(self, word):
    return TensorElement(self.algebra.mode, {tuple(word): 1}, plus=self.plus)
  
  def basis(self, max_len=None):
    return [ self.element(w) for w in self.words(self.max_len if max_len is None else max_len) ]
  
  def random_word(self, rng):
    alphabet = self.random_alphabet
    length = rng.randint(1 if self.plus else 0, self.random_len)
    return tuple( rng.choice(alphabet) for _ in range(length) )
  
  def tuples(self, arity):
    bound = self.max_len if arity < 3 else self.triple_len
    basis = self.basis(bound)
    for combo in product(basis, repeat=arity):
      yield combo
    rng = random.Random(self.seed)
    for _ in range(self.random_samples):
      yield tuple( self.element(self.random_word(rng)) for _ in range(arity) )
  
  def __repr__(self):
    return 'SamplePolicy(max_len={}, random_len={}, random_samples={}, seed={})'.format(
      self.max_len, self.random_len, self.random_samples, self.seed)

class FixedSamples:
  """
  Every tuple drawn from a fixed list of elements.
  """
  
  def __init__(self, elements):
    self.elements = list(elements)
  
  def tuples(self, arity):
    return product(self.elements, repeat=arity)

def word_degree(word):
  return sum( m.degree for m in word )

class DegreeBoundedSamples:
  """
  Tuples of words with non-unit letters whose total letter-degree is at most max_degree.
  
  Args:
    algebra (BaseAlgebra): Source of generators and mode.
    max_degree (int): Bound on the summed degree of all words in a tuple.
    names (list): Generators to use; defaults to the first two.
  """
  
  def __init__(self, algebra, max_degree, names=None):
    self.algebra = algebra
    self.max_degree = max_degree
    self.names = list(names) if names is not None else algebra.names[:2]
  
  def words(self, max_degree=None):
    max_degree = self.max_degree if max_degree is None else max_degree
    letters = self.algebra.monomials_up_to(max_degree, self.names)
    found = []
    frontier = [()]
    while frontier:
      extended = []
      for word in frontier:
        for letter in letters:
          candidate = word + (letter,)
          if word_degree(candidate) <= max_degree:
            extended.append(candidate)
      found.extend(extended)
      frontier = extended
    return found
  
  def element(self, word):
    return TensorElement(self.algebra.mode, {word: 1}, plus=True)
  
  def basis(self):
    return [ self.element(w) for w in self.words() ]
  
  def tuples(self, arity):
    words = self.words()
    for combo in product(words, repeat=arity):
      if sum( word_degree(w) for w in combo ) <= self.max_degree:
        yield tuple( self.element(w) for w in combo )
