# SPDX-License-Identifier: Apache-2.0

from collections import defaultdict
from functools import partial
from itertools import product

from pyrota.core.errors import ModeMismatch
from pyrota.algebra.scalar import ONE, ZERO
from pyrota.algebra.monomial import Monomial, COMMUTATIVE
from pyrota.algebra.base import BaseElement
from pyrota.algebra.tensor import TensorElement
from pyrota.algebra.legs import TwoLegElement, COMODULE
from pyrota.shuffle import RECURSIVE
from pyrota.shuffle.kind import QUASI_SHUFFLE
from pyrota.operators.ambient import TensorAmbient
from pyrota.operators.shift import RightShift
from pyrota.operators.report import CheckReport, run_equations

def _require_commutative(algebra):
  if algebra.mode != COMMUTATIVE:
    raise ModeMismatch('The lifted coproduct needs a commutative bialgebra H')

def shift_factor(kind):
  """
  The scalar s with ε∘P = s·ε: -θ for the quasi-shuffle, 1 for the shift shuffles.
  """
  return -kind.theta if kind.tag == QUASI_SHUFFLE else ONE

def delta_case1(kind, x, algebra):
  """
  Δ(h1|...|hn) = (h1(1)|...|hn(1)) ⊗ h1(2)...hn(2), letterwise Sweedler expansion.
  """
  _require_commutative(algebra)
  x.require_plus()
  acc = defaultdict(lambda: ZERO)
  for word, coeff in x.terms.items():
    expansions = [ algebra.monomial_coproduct(m).items() for m in word ]
    for choice in product(*expansions):
      right = Monomial.unit(algebra.mode)
      c = coeff
      for (_, r), k in choice:
        right = right * r
        c *= k
      acc[(tuple( l for (l, _), _ in choice ), (right,))] += c
  return TwoLegElement(algebra.mode, acc, policy=COMODULE)

def counit_case1(kind, x, algebra):
  """
  ε(h1|...|hn) = s^(n-1) ε(h1)...ε(hn) with s = shift_factor(kind).
  """
  _require_commutative(algebra)
  x.require_plus()
  factor = shift_factor(kind)
  total = ZERO
  for word, coeff in x.terms.items():
    value = coeff * factor ** (len(word) - 1)
    for m in word:
      value *= algebra.monomial_counit(m)
    total += value
  return total

def delta_case1_by_extension(kind, x, algebra, engine=RECURSIVE):
  """
  Δ((a)) = δ(a) and Δ(a ⊗ U) = δ(a) · (P ⊗ id)Δ(U), legs multiplied in T+(H).
  """
  _require_commutative(algebra)
  ambient = TensorAmbient(algebra.mode, kind, plus=True, engine=engine)
  P = RightShift()
  def word_delta(word):
    head = algebra.coproduct(BaseElement.monomial(word[0]))
    if len(word) == 1:
      return head
    return head.legwise(word_delta(word[1:]).map_leg(0, P), ambient.mul, ambient.mul)
  total = TwoLegElement(algebra.mode)
  for word, coeff in x.require_plus().terms.items():
    total = total + word_delta(word).scale(coeff)
  return total.with_policy(COMODULE)

def counit_case1_by_extension(kind, x, algebra):
  factor = shift_factor(kind)
  def word_counit(word):
    head = algebra.monomial_counit(word[0])
    if len(word) == 1:
      return head
    return head * factor * word_counit(word[1:])
  return sum( (coeff * word_counit(word) for word, coeff in x.require_plus().terms.items()), ZERO )

def _base_delta(algebra, t):
  (word, coeff), = t.items()
  return algebra.coproduct(BaseElement.monomial(word[0], coeff))

def _base_counit(algebra, t):
  return sum( (c * algebra.monomial_counit(w[0]) for w, c in t.terms.items()), ZERO )

def letters_product(kind, x, algebra):
  """
  Expected (ε ⊗ id)Δ: each word becomes s^(n-1) times the product of its letters.
  """
  factor = shift_factor(kind)
  acc = defaultdict(lambda: ZERO)
  for word, coeff in x.terms.items():
    mono = Monomial.unit(algebra.mode)
    for m in word:
      mono = mono * m
    acc[(mono,)] += coeff * factor ** (len(word) - 1)
  return TensorElement(algebra.mode, acc)

def case1_unary_equations(kind, algebra, engine, x):
  delta = partial(delta_case1, kind, algebra=algebra)
  counit = partial(counit_case1, kind, algebra=algebra)
  P = RightShift()
  dx = delta(x)
  return [
    ('(Δ⊗id)Δ = (id⊗δ)Δ', dx.expand_leg(0, delta), dx.expand_leg(1, partial(_base_delta, algebra))),
    ('(id⊗ε)Δ = id', dx.contract_leg(1, partial(_base_counit, algebra)), x.as_plain()),
    ('(ε⊗id)Δ = s^(n-1) h1...hn', dx.contract_leg(0, counit), letters_product(kind, x, algebra)),
    ('Δ∘P = (P⊗id)∘Δ', delta(P(x)), dx.map_leg(0, P)),
    ('ε∘P = s·ε', counit(P(x)), shift_factor(kind) * counit(x)),
    ('Δ closed form = Δ by extension', dx, delta_case1_by_extension(kind, x, algebra, engine)),
    ('ε closed form = ε by extension', counit(x), counit_case1_by_extension(kind, x, algebra))
  ]

def case1_morphism_equations(kind, algebra, ambient, x, y):
  delta = partial(delta_case1, kind, algebra=algebra)
  counit = partial(counit_case1, kind, algebra=algebra)
  xy = ambient.mul(x, y)
  return [
    ('Δ(x•̄y) = Δ(x)Δ(y)', delta(xy), delta(x).legwise(delta(y), ambient.mul, ambient.mul)),
    ('ε(x•̄y) = ε(x)ε(y)', counit(xy), counit(x) * counit(y))
  ]

def check_case1_laws(kind, algebra, samples, engine=RECURSIVE):
  """
  Coassociativity, both counit laws, compatibility with P and agreement with the inductive extension.
  """
  report = CheckReport('bialgebra_case1', 'Δ', '{}+ over H[{}]'.format(kind.label, algebra.spec()))
  return run_equations(report, samples.tuples(1), partial(case1_unary_equations, kind, algebra, engine))

def check_case1_morphism(kind, algebra, samples, engine=RECURSIVE):
  ambient = TensorAmbient(algebra.mode, kind, plus=True, engine=engine)
  report = CheckReport('bialgebra_case1_morphism', 'Δ', '{} over H[{}]'.format(ambient.label, algebra.spec()))
  return run_equations(report, samples.tuples(2), partial(case1_morphism_equations, kind, algebra, ambient))

def substitute(x, mapping, target):
  """
  Letterwise lift of the generator substitution mapping into the algebra target.
  """
  def image(m):
    return Monomial.from_letters(target.mode, [ mapping[n] for n in m.letters ])
  acc = defaultdict(lambda: ZERO)
  for word, coeff in x.terms.items():
    acc[tuple( image(m) for m in word )] += coeff
  return TensorElement(target.mode, acc, plus=x.plus)

def case1_functor_equations(kind, source, target, mapping, x):
  f = partial(substitute, mapping=mapping, target=target)
  lhs = delta_case1(kind, f(x), target)
  rhs = delta_case1(kind, x, source).map_leg(0, f).map_leg(1, f)
  return [
    ('Δ₂∘X(f) = (X(f)⊗f)∘Δ₁', lhs, rhs),
    ('ε₂∘X(f) = ε₁', counit_case1(kind, f(x), target), counit_case1(kind, x, source))
  ]

def check_case1_functor(kind, source, target, mapping, samples):
  """
  The lift of a bialgebra morphism given by a generator substitution intertwines Δ and ε.
  """
  for name, image in mapping.items():
    if source.generator(name).coproduct_rule != target.generator(image).coproduct_rule:
      raise ModeMismatch('Substitution {}->{} does not preserve the coproduct rule'.format(name, image))
  report = CheckReport('bialgebra_case1_functor', 'X(f)', '{}+ H[{}]->H[{}]'.format(kind.label, source.spec(), target.spec()))
  return run_equations(report, samples.tuples(1), partial(case1_functor_equations, kind, source, target, mapping))
