# SPDX-License-Identifier: Apache-2.0

from pyrota.core.errors import UsageError
from pyrota.algebra.tensor import TensorElement, bilinear
from pyrota.shuffle.kind import ProductKind, SH, RSH, LSH, QSH_ONE, qsh, TAGS
from pyrota.shuffle.combinatorial import ShuffleSpec, enumerate_shuffles, admissible_pairs, product_combinatorial
from pyrota.shuffle.recursive import product_recursive
from pyrota.shuffle import combinatorial, recursive

RECURSIVE = 'recursive'
COMBINATORIAL = 'combinatorial'

ENGINES = {
  RECURSIVE: recursive.word_product,
  COMBINATORIAL: combinatorial.word_product
}

def word_product(kind, u, v, engine=RECURSIVE):
  """
  The product of two words as a TensorElement.
  """
  if engine not in ENGINES:
    raise UsageError('Unknown engine "{}" (expected one of {})'.format(engine, ', '.join(sorted(ENGINES))))
  terms = ENGINES[engine](kind, tuple(u), tuple(v))
  mode = (u[0] if u else v[0]).mode
  return TensorElement(mode, dict(terms))

def product(kind, X, Y, engine=RECURSIVE):
  """
  X •^q Y on T(A), extended bilinearly.
  """
  return bilinear(X, Y, lambda u, v: _word_element(kind, u, v, X.mode, engine))

def _word_element(kind, u, v, mode, engine):
  if not u and not v:
    return TensorElement.empty(mode)
  return word_product(kind, u, v, engine)

def product_plus(kind, X, Y, engine=RECURSIVE):
  """
  The extended product on T+(A): (a ⊗ U) •̄ (b ⊗ V) = [a;b] ⊗ (U • V).
  """
  X.require_plus()
  Y.require_plus()
  def head_product(u, v):
    tail = _word_element(kind, u[1:], v[1:], X.mode, engine)
    head = (u[0] * v[0],)
    return TensorElement(X.mode, { head + w: c for w, c in tail.terms.items() }, plus=True)
  return bilinear(X, Y, head_product, plus=True)
