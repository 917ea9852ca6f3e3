# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass
from functools import partial
from typing import Any, Optional

from pyrota.core.errors import UsageError
from pyrota.algebra.scalar import is_scalar, format_scalar
from pyrota.operators.report import CheckReport, run_equations
from pyrota.operators.conjugate import Conjugate, RB_TILDE, NIJ_TILDE, TD_TILDE
from pyrota.operators.double import double_product, STAR_R, STAR_N

ROTA_BAXTER = 'rota_baxter'
NIJENHUIS = 'nijenhuis'
TD = 'td'
AVERAGE = 'average'
RB_HOMOMORPHISM = 'rb_homomorphism'
NIJ_HOMOMORPHISM = 'nij_homomorphism'
CONJUGATE_RB_HOMOMORPHISM = 'conjugate_rb_homomorphism'
NIJ_CONJUGATE_HOMOMORPHISM = 'nij_conjugate_homomorphism'
NIJ_CONJUGATE_LITERAL = 'nij_conjugate_literal'
TD_CENTER = 'td_center'
TD_CONJUGATE_ROTA_BAXTER = 'td_conjugate_rota_baxter'
ASSOCIATIVE = 'associative'
COMMUTATIVE = 'commutative'
UNITAL = 'unital'

WEIGHTED = (ROTA_BAXTER, RB_HOMOMORPHISM, CONJUGATE_RB_HOMOMORPHISM)

@dataclass(frozen=True)
class IdentityKind:
  """
  An operator identity, with its weight where the identity has one.
  
  The weight of rota_baxter may be a scalar or an element of the ambient algebra.
  """
  tag: str
  weight: Optional[Any] = None
  
  def __post_init__(self):
    if self.tag not in EQUATIONS:
      raise UsageError('Unknown identity "{}"'.format(self.tag))
    if self.tag in WEIGHTED and self.weight is None:
      raise UsageError('Identity {} needs a weight'.format(self.tag))
  
  @property
  def arity(self):
    if self.tag == ASSOCIATIVE:
      return 3
    if self.tag in (TD_CENTER, UNITAL):
      return 1
    return 2
  
  @property
  def label(self):
    if self.weight is None:
      return self.tag
    if is_scalar(self.weight):
      return '{}({})'.format(self.tag, format_scalar(self.weight))
    return '{}({})'.format(self.tag, self.weight.render())

def weighted(mul, x, theta, y):
  if is_scalar(theta):
    return mul(x, y).scale(theta)
  return mul(mul(x, theta), y)

def rota_baxter_equations(kind, op, ambient, x, y):
  mul = ambient.mul
  R = op
  lhs = mul(R(x), R(y))
  rhs = R(mul(R(x), y) + mul(x, R(y))) + R(weighted(mul, x, kind.weight, y))
  return [('R(x)R(y) = R(R(x)y + xR(y) + xθy)', lhs, rhs)]

def nijenhuis_equations(kind, op, ambient, x, y):
  mul = ambient.mul
  N = op
  lhs = mul(N(x), N(y))
  rhs = N(mul(N(x), y) + mul(x, N(y))) - N(N(mul(x, y)))
  return [('N(x)N(y) = N(N(x)y + xN(y)) - N²(xy)', lhs, rhs)]

def td_equations(kind, op, ambient, x, y):
  mul = ambient.mul
  P = op
  p1 = P(ambient.unit())
  lhs = mul(P(x), P(y))
  rhs = P(mul(P(x), y) + mul(x, P(y))) - P(mul(mul(x, p1), y))
  return [('P(x)P(y) = P(P(x)y + xP(y) - xP(1)y)', lhs, rhs)]

def average_equations(kind, op, ambient, x, y):
  mul = ambient.mul
  P = op
  lhs = mul(P(x), P(y))
  return [
    ('P(x)P(y) = P(xP(y))', lhs, P(mul(x, P(y)))),
    ('P(x)P(y) = P(P(x)y)', lhs, P(mul(P(x), y)))
  ]

def rb_homomorphism_equations(kind, op, ambient, x, y):
  star = double_product(STAR_R, x, y, ambient, op, kind.weight)
  return [('R(x*_R y) = R(x)R(y)', op(star), ambient.mul(op(x), op(y)))]

def nij_homomorphism_equations(kind, op, ambient, x, y):
  star = double_product(STAR_N, x, y, ambient, op)
  return [('N(x*_N y) = N(x)N(y)', op(star), ambient.mul(op(x), op(y)))]

def conjugate_rb_homomorphism_equations(kind, op, ambient, x, y):
  star = double_product(STAR_R, x, y, ambient, op, kind.weight)
  tilde = Conjugate(op, RB_TILDE, theta=kind.weight)
  return [('R~(x*_R y) = -R~(x)R~(y)', tilde(star), -ambient.mul(tilde(x), tilde(y)))]

def nij_conjugate_homomorphism_equations(kind, op, ambient, x, y):
  star = double_product(STAR_N, x, y, ambient, op)
  tilde = Conjugate(op, NIJ_TILDE)
  rhs = tilde(ambient.mul(x, y)) - ambient.mul(tilde(x), tilde(y))
  return [('N~(x*_N y) = N~(xy) - N~(x)N~(y)', tilde(star), rhs)]

def nij_conjugate_literal_equations(kind, op, ambient, x, y):
  star = double_product(STAR_N, x, y, ambient, op)
  tilde = Conjugate(op, NIJ_TILDE)
  return [('N~(x*_N y) = -N~(x)N~(y)', tilde(star), -ambient.mul(tilde(x), tilde(y)))]

def td_center_equations(kind, op, ambient, x):
  p1 = op(ambient.unit())
  square = op(op(x))
  return [
    ('P(1)P(x) = P²(x)', ambient.mul(p1, op(x)), square),
    ('P(x)P(1) = P²(x)', ambient.mul(op(x), p1), square)
  ]

def td_conjugate_rota_baxter_equations(kind, op, ambient, x, y):
  tilde = Conjugate(op, TD_TILDE, ambient=ambient)
  weight = -op(ambient.unit())
  unit = ambient.unit()
  laws = rota_baxter_equations(IdentityKind(ROTA_BAXTER, weight), tilde, ambient, x, y)
  laws.append(('P~(1) = 0', tilde(unit), unit.scale(0)))
  return laws

def associative_equations(kind, op, ambient, x, y, z):
  mul = ambient.mul
  return [('(xy)z = x(yz)', mul(mul(x, y), z), mul(x, mul(y, z)))]

def commutative_equations(kind, op, ambient, x, y):
  return [('xy = yx', ambient.mul(x, y), ambient.mul(y, x))]

def unital_equations(kind, op, ambient, x):
  unit = ambient.unit()
  return [
    ('1x = x', ambient.mul(unit, x), x),
    ('x1 = x', ambient.mul(x, unit), x)
  ]

EQUATIONS = {
  ROTA_BAXTER: rota_baxter_equations,
  NIJENHUIS: nijenhuis_equations,
  TD: td_equations,
  AVERAGE: average_equations,
  RB_HOMOMORPHISM: rb_homomorphism_equations,
  NIJ_HOMOMORPHISM: nij_homomorphism_equations,
  CONJUGATE_RB_HOMOMORPHISM: conjugate_rb_homomorphism_equations,
  NIJ_CONJUGATE_HOMOMORPHISM: nij_conjugate_homomorphism_equations,
  NIJ_CONJUGATE_LITERAL: nij_conjugate_literal_equations,
  TD_CENTER: td_center_equations,
  TD_CONJUGATE_ROTA_BAXTER: td_conjugate_rota_baxter_equations,
  ASSOCIATIVE: associative_equations,
  COMMUTATIVE: commutative_equations,
  UNITAL: unital_equations
}

def td_weight(op, ambient):
  """
  The element weight -P(1) under which a TD-operator is a Rota-Baxter operator.
  """
  return IdentityKind(ROTA_BAXTER, -op(ambient.unit()))

def _probe_weight(report, op, ambient, weight, x):
  image = op(x)
  if ambient.mul(weight, image) != ambient.mul(image, weight):
    report.note('weight {} does not commute with {}({})'.format(weight.render(), op.name, x.render()))

def check_identity(kind, op, ambient, samples, expected=True):
  """
  Evaluates both sides of an identity on every sample tuple.
  
  Args:
    kind (IdentityKind): The identity.
    op (Operator): The operator under test; ignored by associative/commutative.
    ambient (Ambient): Where products are taken.
    samples: Any object with tuples(arity), such as SamplePolicy or FixedSamples.
    expected (bool): False for negative controls.
  
  Returns:
    CheckReport
  """
  op_name = op.name if op is not None else '-'
  report = CheckReport(kind.label, op_name, ambient.label, expected=expected)
  equations = partial(EQUATIONS[kind.tag], kind, op, ambient)
  if kind.tag == ROTA_BAXTER and not is_scalar(kind.weight):
    def probed(*args):
      _probe_weight(report, op, ambient, kind.weight, args[0])
      return equations(*args)
    return run_equations(report, samples.tuples(kind.arity), probed)
  return run_equations(report, samples.tuples(kind.arity), equations)
