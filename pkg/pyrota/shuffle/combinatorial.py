# SPDX-License-Identifier: Apache-2.0

from collections import defaultdict
from dataclasses import dataclass, field
from typing import FrozenSet, Tuple

from more_itertools import distinct_permutations, powerset

from pyrota.algebra.scalar import ONE, ZERO
from pyrota.algebra.tensor import TensorElement, bilinear

@dataclass(frozen=True)
class ShuffleSpec:
  """
  An (m,n)-shuffle sigma together with a chosen set of contracted pairs.
  
  sigma is stored 1-based: position k of the merged word holds letter sigma[k-1]
  of the concatenation of the two input words.
  """
  m: int
  n: int
  sigma: Tuple[int, ...]
  contracted: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)
  
  def __post_init__(self):
    if sorted(self.sigma) != list(range(1, self.m + self.n + 1)):
      raise ValueError('sigma is not a permutation of 1..{}'.format(self.m + self.n))
    left = [ s for s in self.sigma if s <= self.m ]
    right = [ s for s in self.sigma if s > self.m ]
    if left != sorted(left) or right != sorted(right):
      raise ValueError('sigma {} is not an ({},{})-shuffle'.format(self.sigma, self.m, self.n))
    if not self.contracted <= admissible_pairs(self):
      raise ValueError('Contracted pairs {} are not admissible'.format(sorted(self.contracted)))
  
  def with_contractions(self, pairs):
    return ShuffleSpec(self.m, self.n, self.sigma, frozenset(pairs))

def enumerate_shuffles(m, n):
  """
  All (m,n)-shuffles with no contractions, in a fixed order starting with the identity.
  """
  specs = []
  for pattern in sorted(distinct_permutations([0] * m + [1] * n)):
    left, right = 1, m + 1
    sigma = []
    for side in pattern:
      if side == 0:
        sigma.append(left)
        left += 1
      else:
        sigma.append(right)
        right += 1
    specs.append(ShuffleSpec(m, n, tuple(sigma)))
  return specs

def admissible_pairs(spec):
  sigma = spec.sigma
  return frozenset( (k, k + 1) for k in range(1, len(sigma)) if sigma[k - 1] <= spec.m < sigma[k] )

def merge(spec, u, v, kind):
  """
  Builds the word of (sigma, T) applied to u ⊗ v.
  
  Returns:
    (coefficient, word)
  """
  letters = u + v
  coeff = ONE
  word = []
  k = 1
  while k <= len(spec.sigma):
    if (k, k + 1) in spec.contracted:
      c, contracted = kind.contract(letters[spec.sigma[k - 1] - 1], letters[spec.sigma[k] - 1])
      coeff *= c
      word.extend(contracted)
      k += 2
    else:
      word.append(letters[spec.sigma[k - 1] - 1])
      k += 1
  return coeff, tuple(word)

def word_product(kind, u, v):
  acc = defaultdict(lambda: ZERO)
  for spec in enumerate_shuffles(len(u), len(v)):
    pairs = sorted(admissible_pairs(spec)) if kind.has_contractions else []
    for chosen in powerset(pairs):
      coeff, word = merge(spec.with_contractions(chosen), u, v, kind)
      acc[word] += coeff
  return acc

def product_combinatorial(kind, X, Y):
  """
  The product X •^q Y summed over all shuffles and admissible contraction sets.
  """
  return bilinear(X, Y, lambda u, v: TensorElement(X.mode, word_product(kind, u, v)))
