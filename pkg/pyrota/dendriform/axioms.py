# SPDX-License-Identifier: Apache-2.0

from functools import partial

from pyrota.operators.report import CheckReport, run_equations
from pyrota.operators.double import double_product, STAR_P
from pyrota.dendriform.structure import LeftShiftTridend, QuasiShuffleTridend

def tridend_equations(s, x, y, z):
  prec, succ, dot, star = s.prec, s.succ, s.dot, s.star
  laws = [
    ('(x≺y)≺z = x≺(y⋆z)', prec(prec(x, y), z), prec(x, star(y, z))),
    ('(x≻y)≺z = x≻(y≺z)', prec(succ(x, y), z), succ(x, prec(y, z))),
    ('(x⋆y)≻z = x≻(y≻z)', succ(star(x, y), z), succ(x, succ(y, z))),
    ('(x≻y)•z = x≻(y•z)', dot(succ(x, y), z), succ(x, dot(y, z))),
    ('(x≺y)•z = x•(y≻z)', dot(prec(x, y), z), dot(x, succ(y, z))),
    ('(x•y)≺z = x•(y≺z)', prec(dot(x, y), z), dot(x, prec(y, z))),
    ('(x•y)•z = x•(y•z)', dot(dot(x, y), z), dot(x, dot(y, z)))
  ]
  if s.is_commutative:
    laws.extend([
      ('x≺y = y≻x', prec(x, y), succ(y, x)),
      ('x•y = y•x', dot(x, y), dot(y, x))
    ])
  return laws

def check_tridend_axioms(s, samples, expected=True):
  """
  Checks the seven tridendriform relations on sampled triples, plus
  commutativity when the base is commutative.
  """
  identity = 'tridendriform' + ('+commutative' if s.is_commutative else '')
  report = CheckReport(identity, s.carrier, s.carrier, expected=expected)
  return run_equations(report, samples.tuples(3), partial(tridend_equations, s))

def star_equations(s, x, y):
  if isinstance(s, LeftShiftTridend):
    return [('x⋆y = x*_P y', s.star(x, y), double_product(STAR_P, x, y, s.ambient, s.operator))]
  if isinstance(s, QuasiShuffleTridend):
    return [('x⋆y = x•¹y', s.star(x, y), s.product(x, y))]
  return []

def star_associative_equations(s, x, y, z):
  return [('(x⋆y)⋆z = x⋆(y⋆z)', s.star(s.star(x, y), z), s.star(x, s.star(y, z)))]

def check_star(s, samples):
  """
  Compares ⋆ with its closed form on the carrier: the double product *_P for
  the left-shift structure, the weight-1 quasi-shuffle for qone.
  """
  report = CheckReport('star', s.carrier, s.carrier)
  return run_equations(report, samples.tuples(2), partial(star_equations, s))

def check_star_associative(s, samples):
  report = CheckReport('star_associative', s.carrier, s.carrier)
  return run_equations(report, samples.tuples(3), partial(star_associative_equations, s))
