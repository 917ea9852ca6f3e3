# SPDX-License-Identifier: Apache-2.0

from collections import defaultdict
from functools import lru_cache

from pyrota.algebra.scalar import ONE, ZERO
from pyrota.algebra.tensor import TensorElement, bilinear

WORD_CACHE_SIZE = 1 << 16

@lru_cache(maxsize=WORD_CACHE_SIZE)
def word_product(kind, u, v):
  """
  Recursive product of two words, memoized per (kind, u, v).
  
  With u = a u' and v = b v':
    u • v = a(u' • v) + b(u • v') + c(a, b)(u' • v')
  where c is the contraction of the kind (none for sh). The empty word is neutral.
  
  Returns:
    tuple of (word, coefficient) pairs
  """
  if not u:
    return ((v, ONE),)
  if not v:
    return ((u, ONE),)
  a, b = u[0], v[0]
  acc = defaultdict(lambda: ZERO)
  for w, c in word_product(kind, u[1:], v):
    acc[(a,) + w] += c
  for w, c in word_product(kind, u, v[1:]):
    acc[(b,) + w] += c
  contraction = kind.contract(a, b)
  if contraction:
    coeff, letters = contraction
    for w, c in word_product(kind, u[1:], v[1:]):
      acc[letters + w] += coeff * c
  return tuple( (w, c) for w, c in acc.items() if c )

def product_recursive(kind, X, Y):
  return bilinear(X, Y, lambda u, v: TensorElement(X.mode, dict(word_product(kind, u, v))))
