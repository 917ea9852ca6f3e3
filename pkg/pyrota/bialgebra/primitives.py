# SPDX-License-Identifier: Apache-2.0

from collections import defaultdict
from fractions import Fraction

from sympy import Matrix, Rational

from pyrota.core.errors import UsageError
from pyrota.algebra.monomial import COMMUTATIVE
from pyrota.algebra.tensor import TensorElement, word_key
from pyrota.algebra.legs import TwoLegElement, FREE
from pyrota.operators.samples import word_degree
from pyrota.operators.report import CheckReport
from pyrota.bialgebra.case1 import delta_case1
from pyrota.bialgebra.case2 import delta_case2

DEFAULT_BOUND_CAP = 4

def primitive_basis_words(algebra, bound):
  """
  Words of length 1..bound whose letters (unit letters included) have total degree at most bound.
  """
  letters = [ algebra.unit_monomial() ] + algebra.monomials_up_to(bound)
  words = []
  frontier = [()]
  for _ in range(bound):
    frontier = [ w + (m,) for w in frontier for m in letters if word_degree(w + (m,)) <= bound ]
    words.extend(frontier)
  return sorted(words, key=word_key)

def primitive_defect(case, kind, x, algebra):
  """
  Δ(x) - x⊗(1) - (1)⊗x, with (1)⊗x keeping the word x in the right leg.
  """
  delta = (delta_case1(kind, x, algebra) if case == 1 else delta_case2(x)).with_policy(FREE)
  unit = TensorElement.unit_word(algebra.mode)
  return delta - TwoLegElement.from_pair(x, unit) - TwoLegElement.from_pair(unit, x)

class _Components:
  """
  Union-find over column indices.
  """
  
  def __init__(self, size):
    self.parent = list(range(size))
  
  def find(self, i):
    while self.parent[i] != i:
      self.parent[i] = self.parent[self.parent[i]]
      i = self.parent[i]
    return i
  
  def union(self, i, j):
    ri, rj = self.find(i), self.find(j)
    if ri != rj:
      self.parent[max(ri, rj)] = min(ri, rj)
  
  def groups(self):
    found = defaultdict(list)
    for i in range(len(self.parent)):
      found[self.find(i)].append(i)
    return [ found[k] for k in sorted(found) ]

def primitives_at_bound(case, kind, bound, algebra, cap=DEFAULT_BOUND_CAP):
  """
  Basis of the primitive elements spanned by primitive_basis_words(algebra, bound).
  
  Columns that share a row of the defect system are grouped, and the exact
  rational nullspace of each group is computed separately and brought to
  reduced row echelon form, so the returned basis is canonical.
  """
  if case not in (1, 2):
    raise UsageError('Unknown bialgebra case {}'.format(case))
  if algebra.mode != COMMUTATIVE:
    raise UsageError('Primitive elements are computed over a commutative base only')
  if bound < 1 or bound > cap:
    raise UsageError('Primitive bound must lie in 1..{}, got {}'.format(cap, bound))
  words = primitive_basis_words(algebra, bound)
  columns = [ primitive_defect(case, kind, TensorElement(algebra.mode, {w: 1}, plus=True), algebra) for w in words ]
  rows = {}
  components = _Components(len(words))
  for j, defect in enumerate(columns):
    for key in defect.terms:
      if key in rows:
        components.union(rows[key], j)
      else:
        rows[key] = j
  basis = []
  for group in components.groups():
    keys = sorted({ key for j in group for key in columns[j].terms }, key=repr)
    if not keys:
      vectors = [ [ 1 if i == j else 0 for i in range(len(group)) ] for j in range(len(group)) ]
    else:
      matrix = Matrix([ [ Rational(columns[j].terms.get(key, 0).numerator, columns[j].terms.get(key, 0).denominator) for j in group ] for key in keys ])
      vectors = [ list(v) for v in matrix.nullspace() ]
    if not vectors:
      continue
    reduced, _ = Matrix(vectors).rref()
    for r in range(reduced.rows):
      row = reduced.row(r)
      if all( e == 0 for e in row ):
        continue
      terms = { words[group[i]]: Fraction(int(e.p), int(e.q)) for i, e in enumerate(row) if e != 0 }
      basis.append(TensorElement(algebra.mode, terms, plus=True))
  return sorted(basis, key=lambda x: word_key(x.words()[0]))

def check_primitives(case, kind, bound, algebra, expected_basis, cap=DEFAULT_BOUND_CAP):
  """
  Compares the computed primitive basis with expected_basis, a list of TensorElements.
  
  Every basis element is also checked to have zero defect.
  """
  label = 'case{}'.format(case) if case == 2 else '{} case1'.format(kind.label)
  report = CheckReport('primitives(D={})'.format(bound), 'Δ', '{} over H[{}]'.format(label, algebra.spec()))
  basis = primitives_at_bound(case, kind, bound, algebra, cap)
  for x in basis:
    defect = primitive_defect(case, kind, x, algebra)
    if defect:
      report.record_failure([x], defect, 0, 'Δx = x⊗(1) + (1)⊗x')
      return report
    report.samples += 1
  expected_basis = sorted(expected_basis, key=lambda x: word_key(x.words()[0]))
  if basis != expected_basis:
    report.record_failure([bound], basis, expected_basis, 'primitive basis')
  return report
