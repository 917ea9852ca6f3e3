# SPDX-License-Identifier: Apache-2.0

from functools import partial

from pyrota.algebra.tensor import TensorElement
from pyrota.shuffle import RECURSIVE
from pyrota.operators.ambient import TensorAmbient
from pyrota.operators.shift import RightShift
from pyrota.operators.lift import lift_morphism
from pyrota.operators.report import CheckReport, run_equations
from pyrota.dendriform.structure import LeftShiftTridend, QuasiShuffleTridend

def involution_extend(x, algebra):
  """
  Letterwise involution (a1|...|an)† = (a1†|...|an†); the outer order is kept.
  """
  return x.map_letters(algebra.involute_monomial)

def involutive_tridend_equations(algebra, qone, x, y):
  dagger = partial(involution_extend, algebra=algebra)
  return [
    ('(x≺₁y)† = y†≻₁x†', dagger(qone.prec(x, y)), qone.succ(dagger(y), dagger(x))),
    ('(x•₁y)† = y†•₁x†', dagger(qone.dot(x, y)), qone.dot(dagger(y), dagger(x))),
    ('x†† = x', dagger(dagger(x)), x)
  ]

def check_involutive_qone(algebra, samples, engine=RECURSIVE):
  """
  Involutive laws of the weight-1 quasi-shuffle structure over a noncommutative base.
  """
  qone = QuasiShuffleTridend(algebra.mode, engine)
  report = CheckReport('involutive_tridendriform', '†', qone.carrier)
  return run_equations(report, samples.tuples(2), partial(involutive_tridend_equations, algebra, qone))

def involutive_commutative_equations(algebra, s, x, y):
  dagger = partial(involution_extend, algebra=algebra)
  return [
    ('(X≺Y)† = X†≺Y†', dagger(s.prec(x, y)), s.prec(dagger(x), dagger(y))),
    ('(X•Y)† = X†•Y†', dagger(s.dot(x, y)), s.dot(dagger(x), dagger(y)))
  ]

def check_involutive_plus_lsh(algebra, samples, engine=RECURSIVE):
  s = LeftShiftTridend(algebra.mode, engine)
  report = CheckReport('involutive_commutative_tridendriform', '†', s.carrier)
  return run_equations(report, samples.tuples(2), partial(involutive_commutative_equations, algebra, s))

def involutive_pairing_image(algebra, name):
  """
  i_A(g + g*g†): a generator image that commutes with the involution.
  """
  gen = algebra.element(name)
  base = gen + gen * algebra.element(algebra.pairing[name])
  return TensorElement(algebra.mode, { (m,): c for m, c in base.terms.items() }, plus=True)

def involutive_free_equations(algebra, ambient, lift, x, y):
  dagger = partial(involution_extend, algebra=algebra)
  P = RightShift()
  return [
    ('(x•̄y)† = x†•̄y†', dagger(ambient.mul(x, y)), ambient.mul(dagger(x), dagger(y))),
    ('P(x)† = P(x†)', dagger(P(x)), P(dagger(x))),
    ('phi~(x†) = phi~(x)†', lift(dagger(x)), dagger(lift(x)))
  ]

def check_involutive_free(algebra, kind, samples, engine=RECURSIVE):
  """
  The letterwise involution commutes with •̄^q, with P_A and with the lift of an
  involution-compatible base morphism.
  """
  ambient = TensorAmbient(algebra.mode, kind, plus=True, engine=engine)
  phi = { name: involutive_pairing_image(algebra, name) for name in algebra.names }
  lift = lift_morphism(phi, kind, algebra, engine=engine)
  report = CheckReport('involutive_free', '†', ambient.label)
  return run_equations(report, samples.tuples(2), partial(involutive_free_equations, algebra, ambient, lift))
