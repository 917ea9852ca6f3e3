# SPDX-License-Identifier: Apache-2.0

from collections import defaultdict
from functools import partial

from pyrota.core.errors import ModeMismatch
from pyrota.algebra.scalar import ZERO
from pyrota.algebra.monomial import Monomial, COMMUTATIVE
from pyrota.algebra.tensor import TensorElement, is_unit_word
from pyrota.algebra.legs import TwoLegElement, COMODULE
from pyrota import shuffle
from pyrota.shuffle import RSH
from pyrota.operators.ambient import TensorAmbient
from pyrota.operators.shift import RightShift
from pyrota.operators.report import CheckReport, run_equations
from pyrota.bialgebra.amalg import SquareAmbient, Sandwich

def _require_commutative(x):
  if x.mode != COMMUTATIVE:
    raise ModeMismatch('The Nijenhuis bialgebra structure needs a commutative base')

def bracket_star(x):
  """
  [a1|...|an]* = (a1...an), extended linearly.
  """
  _require_commutative(x)
  acc = defaultdict(lambda: ZERO)
  for word, coeff in x.require_plus().terms.items():
    mono = Monomial.unit(x.mode)
    for m in word:
      mono = mono * m
    acc[(mono,)] += coeff
  return TensorElement(x.mode, acc, plus=True)

def delta_case2(x):
  """
  Δ(1^n) = 1^n ⊗ (1); otherwise Δ(w) = w ⊗ (1) + 1^l(w) ⊗ [w]*.
  """
  _require_commutative(x)
  unit = Monomial.unit(x.mode)
  acc = defaultdict(lambda: ZERO)
  for word, coeff in x.require_plus().terms.items():
    acc[(word, (unit,))] += coeff
    if not is_unit_word(word):
      product = Monomial.unit(x.mode)
      for m in word:
        product = product * m
      acc[((unit,) * len(word), (product,))] += coeff
  return TwoLegElement(x.mode, acc, policy=COMODULE)

def counit_case2(x):
  _require_commutative(x)
  return sum( (c for w, c in x.require_plus().terms.items() if is_unit_word(w)), ZERO )

def case2_unary_equations(x):
  P = RightShift()
  dx = delta_case2(x)
  return [
    ('(Δ⊗id)Δ = (id⊗Δ)Δ', dx.expand_leg(0, delta_case2), dx.expand_leg(1, delta_case2)),
    ('(id⊗ε)Δ = id', dx.contract_leg(1, counit_case2), x),
    ('(ε⊗id)Δ = [x]*', dx.contract_leg(0, counit_case2), bracket_star(x)),
    ('Δ∘P = 𝖯∘Δ', delta_case2(P(x)), Sandwich()(dx)),
    ('ε∘P = ε', counit_case2(P(x)), counit_case2(x))
  ]

def case2_morphism_equations(ambient, square, x, y):
  xy = ambient.mul(x, y)
  return [
    ('Δ(x•̄y) = Δ(x)⨿Δ(y)', delta_case2(xy), square.mul(delta_case2(x), delta_case2(y))),
    ('ε(x•̄y) = ε(x)ε(y)', counit_case2(xy), counit_case2(x) * counit_case2(y))
  ]

def check_case2_laws(samples):
  report = CheckReport('bialgebra_case2', 'Δ', 'rsh+')
  return run_equations(report, samples.tuples(1), case2_unary_equations)

def check_case2_morphism(samples, engine=shuffle.RECURSIVE):
  ambient = TensorAmbient(samples.algebra.mode, RSH, plus=True, engine=engine)
  square = SquareAmbient(samples.algebra.mode, RSH, engine)
  report = CheckReport('bialgebra_case2_morphism', 'Δ', '{}->{}'.format(ambient.label, square.label))
  return run_equations(report, samples.tuples(2), partial(case2_morphism_equations, ambient, square))
