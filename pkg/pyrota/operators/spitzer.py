# SPDX-License-Identifier: Apache-2.0

from fractions import Fraction
from math import factorial

from sympy.utilities.iterables import partitions

from pyrota.core.errors import ModeMismatch, UsageError
from pyrota.algebra.monomial import COMMUTATIVE
from pyrota.algebra.scalar import ONE, to_scalar
from pyrota.shuffle import qsh, RECURSIVE
from pyrota.operators.ambient import TensorAmbient
from pyrota.operators.shift import RightShift
from pyrota.operators.report import CheckReport

DEFAULT_ORDER_CAP = 6
ORACLE_ORDER = 3

class TruncatedSeries:
  """
  Power series in t with coefficients in an ambient algebra, truncated above t^order.
  """
  
  def __init__(self, ambient, coefficients, order):
    coefficients = list(coefficients)[:order + 1]
    coefficients += [ ambient.zero() for _ in range(order + 1 - len(coefficients)) ]
    self.ambient = ambient
    self.coefficients = coefficients
    self.order = order
  
  @classmethod
  def one(cls, ambient, order):
    return cls(ambient, [ambient.unit()], order)
  
  def __getitem__(self, n):
    return self.coefficients[n]
  
  def __add__(self, other):
    return TruncatedSeries(self.ambient, [ x + y for x, y in zip(self.coefficients, other.coefficients) ], self.order)
  
  def scale(self, k):
    return TruncatedSeries(self.ambient, [ x.scale(k) for x in self.coefficients ], self.order)
  
  def __mul__(self, other):
    mul = self.ambient.mul
    coefficients = []
    for n in range(self.order + 1):
      total = self.ambient.zero()
      for i in range(n + 1):
        if self.coefficients[i] and other.coefficients[n - i]:
          total = total + mul(self.coefficients[i], other.coefficients[n - i])
      coefficients.append(total)
    return TruncatedSeries(self.ambient, coefficients, self.order)
  
  def exp(self):
    """
    Σ s^k / k! for k up to order; the constant coefficient must vanish.
    """
    if self.coefficients[0]:
      raise UsageError('exp needs a series without constant term')
    total = TruncatedSeries.one(self.ambient, self.order)
    power = TruncatedSeries.one(self.ambient, self.order)
    for k in range(1, self.order + 1):
      power = power * self
      total = total + power.scale(Fraction(1, factorial(k)))
    return total
  
  def __eq__(self, other):
    return self.coefficients == other.coefficients

def spitzer_terms(theta, a, order, ambient, operator):
  """
  Returns (r, nested) where r[n] = R((-θ)^(n-1) a^n) and nested[m] = R(R(...R(a)a...)a).
  Index 0 is unused.
  """
  r = [None]
  power = ambient.unit()
  for n in range(1, order + 1):
    power = ambient.mul(power, a)
    r.append(operator(power.scale((-theta) ** (n - 1))))
  nested = [None, operator(a)]
  for m in range(2, order + 1):
    nested.append(operator(ambient.mul(nested[-1], a)))
  return r, nested

def spitzer_partition_sum(r, m, ambient):
  """
  Σ over partitions λ of m of r_1^λ1 ... r_m^λm / (1^λ1 ... m^λm λ1! ... λm!).
  """
  total = ambient.zero()
  for parts in partitions(m):
    parts = dict(parts)
    term = ambient.unit()
    denominator = 1
    for size, count in sorted(parts.items()):
      term = ambient.mul(term, ambient.power(r[size], count))
      denominator *= size ** count * factorial(count)
    total = total + term.scale(Fraction(1, denominator))
  return total

def spitzer_verify(theta, a, order, cap=DEFAULT_ORDER_CAP, engine=RECURSIVE, oracle_order=ORACLE_ORDER):
  """
  Compares exp(Σ r_n t^n / n) with 1 + Σ a_m t^m in (T+(A), •̄^θ, P_A), coefficient by coefficient.
  
  Returns:
    CheckReport with one sample per compared coefficient.
  """
  theta = to_scalar(theta)
  if a.mode != COMMUTATIVE:
    raise ModeMismatch('Spitzer\'s identity is checked in commutative Rota-Baxter algebras only')
  if order < 1 or order > cap:
    raise UsageError('Spitzer order must lie in 1..{}, got {}'.format(cap, order))
  ambient = TensorAmbient(a.mode, qsh(theta), plus=True, engine=engine)
  operator = RightShift()
  a = ambient.embed(a)
  report = CheckReport('spitzer', operator.name, ambient.label)
  r, nested = spitzer_terms(theta, a, order, ambient, operator)
  exponent = TruncatedSeries(ambient, [ambient.zero()] + [ r[n].scale(Fraction(1, n)) for n in range(1, order + 1) ], order)
  lhs = exponent.exp()
  rhs = TruncatedSeries(ambient, [ambient.unit()] + nested[1:], order)
  for n in range(order + 1):
    if lhs[n] != rhs[n]:
      report.record_failure([a, 't^{}'.format(n)], lhs[n], rhs[n], 'exp(Σ r_n t^n/n) = 1 + Σ a_m t^m')
      return report
    report.samples += 1
  for m in range(1, min(order, oracle_order) + 1):
    oracle = spitzer_partition_sum(r, m, ambient)
    if oracle != nested[m]:
      report.record_failure([a, 't^{}'.format(m)], oracle, nested[m], 'partition sum = a_m')
      return report
    report.samples += 1
  return report
