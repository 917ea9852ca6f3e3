# SPDX-License-Identifier: Apache-2.0

import pytest
from fractions import Fraction
from itertools import product

from pyrota.core.errors import (
  CarrierViolation, MissingCoproductRule, ModeMismatch, UnknownGenerator, UsageError
)
from pyrota.algebra import base
from pyrota.algebra.base import BaseAlgebra, BaseElement
from pyrota.algebra.generator import Generator
from pyrota.algebra.monomial import Monomial
from pyrota.algebra.scalar import to_scalar, render_terms
from pyrota.algebra.tensor import TensorElement, word_normalize, grade_decompose, linear_combine, tensor_concat
from pyrota.algebra.legs import TwoLegElement, SQUARE, COMODULE

from tests.util import word, tensor

def test_comm_monomials_commute(comm):
  a, b = comm.monomial('a'), comm.monomial('b')
  assert a * b == b * a
  assert (a * a * b).render() == 'a^2*b'

def test_noncomm_monomials_do_not_commute(noncomm):
  a, b = noncomm.monomial('a'), noncomm.monomial('b')
  assert a * b != b * a
  assert (a * b * a).render() == 'a*b*a'

def test_monomial_mode_mismatch(comm, noncomm):
  with pytest.raises(ModeMismatch):
    comm.monomial('a') * noncomm.monomial('a')

@pytest.mark.parametrize('text', ['1', 'a', 'a^2*b', 'a*b^3'])
def test_monomial_parse_render(comm, text):
  assert comm.parse_monomial(text).render() == text

def test_undeclared_generator(comm):
  with pytest.raises(UnknownGenerator):
    comm.parse_monomial('a*z')
  with pytest.raises(UnknownGenerator):
    comm.monomial('z')

@pytest.mark.parametrize('text, name, rule, partner', [
  ('h:primitive', 'h', 'primitive', 'h'),
  ('g:GroupLike', 'g', 'grouplike', 'g'),
  ('a~b', 'a', None, 'b'),
  ('x:none', 'x', None, 'x')
])
def test_generator_parse(text, name, rule, partner):
  gen = Generator.parse(text)
  assert (gen.name, gen.coproduct_rule, gen.involution_image) == (name, rule, partner)

@pytest.mark.parametrize('text', ['1a', 'h:cocommutative', ''])
def test_generator_parse_errors(text):
  with pytest.raises(UsageError):
    Generator.parse(text)

def test_algebra_spec_round_trip():
  algebra = BaseAlgebra.from_spec('comm', 'h:primitive, g:grouplike, a~b, b')
  assert algebra.names == ['a', 'b', 'g', 'h']
  assert algebra.spec() == 'a~b,b~a,g:grouplike,h:primitive'
  assert BaseAlgebra.from_spec('comm', algebra.spec()) == algebra

def test_algebra_duplicate_generator():
  with pytest.raises(UsageError):
    BaseAlgebra.from_spec('comm', 'a,a')

def test_pairing_needs_declared_partner():
  with pytest.raises(UnknownGenerator):
    BaseAlgebra.from_spec('comm', 'a~b')

def test_unknown_mode():
  with pytest.raises(UsageError):
    BaseAlgebra.from_spec('graded', 'a')

def test_base_element_arithmetic(comm):
  a, b = comm.element('a'), comm.element('b')
  x = (a + b) * (a - b)
  assert x == a * a - b * b
  assert x.render() == 'a^2 - b^2'
  assert (2 + a * Fraction(1, 2)).render() == '2 + 1/2*a'
  assert (a - a).render() == '0'

def test_base_element_refuses_floats(comm):
  with pytest.raises(TypeError):
    comm.element('a') * 0.5
  with pytest.raises(TypeError):
    to_scalar(True)

def test_monomials_up_to(comm, noncomm):
  assert [ m.render() for m in comm.monomials_up_to(2) ] == ['a', 'b', 'a^2', 'a*b', 'b^2']
  assert len(noncomm.monomials_up_to(2)) == 6

def test_involution_swaps_pair():
  algebra = BaseAlgebra.from_spec('comm', 'a~b,b')
  assert algebra.involution(algebra.element('a') * algebra.element('a')) == algebra.element('b') ** 2

def test_noncomm_involution_reverses():
  algebra = BaseAlgebra.from_spec('noncomm', 'a~b,b')
  ab = algebra.element('a') * algebra.element('b')
  assert algebra.involution(ab) == algebra.element('a') * algebra.element('b')
  aab = algebra.element('a') * ab
  assert algebra.involution(aab).render() == 'a*b*b'

def test_primitive_coproduct(hopf):
  h = hopf.monomial('h')
  one = hopf.unit_monomial()
  delta = hopf.coproduct(hopf.element('h'))
  assert delta.policy == COMODULE
  assert delta.coefficient((h,), (one,)) == 1
  assert delta.coefficient((one,), (h,)) == 1
  assert len(delta.terms) == 2

def test_binomial_coproduct(hopf):
  h = hopf.monomial('h')
  one = hopf.unit_monomial()
  delta = hopf.coproduct(hopf.element('h') ** 2)
  assert delta.coefficient((h,), (h,)) == 2
  assert delta.coefficient((h * h,), (one,)) == 1

def test_coproduct_cache_is_bounded(hopf):
  hopf.coproduct(hopf.element('h') ** 3)
  info = base._coproduct_terms.cache_info()
  assert info.maxsize == base.COPRODUCT_CACHE_SIZE
  assert info.currsize <= info.maxsize

def test_grouplike_coproduct_and_counit(hopf):
  g = hopf.monomial('g')
  delta = hopf.coproduct(hopf.element('g'))
  assert delta.terms == {((g,), (g,)): 1}
  assert hopf.counit(hopf.element('g')) == 1
  assert hopf.counit(hopf.element('h') + 3) == 3

def test_coproduct_requires_rules(comm):
  with pytest.raises(MissingCoproductRule):
    comm.coproduct(comm.element('a'))

def test_coproduct_requires_commutative_base():
  algebra = BaseAlgebra.from_spec('noncomm', 'h:primitive')
  with pytest.raises(ModeMismatch):
    algebra.coproduct(algebra.element('h'))

def test_render_terms_zero():
  assert render_terms([]) == '0'

def test_tensor_render_order(comm):
  X = tensor(comm, (Fraction(3, 2), ['a', 'b']), (-1, ['1']))
  assert X.render() == '-(1) + 3/2*(a|b)'
  assert TensorElement.empty('comm', 2).render() == '2*1_K'
  assert TensorElement.zero('comm').render() == '0'

def test_tensor_carrier(comm):
  with pytest.raises(CarrierViolation):
    TensorElement('comm', {(): 1}, plus=True)
  with pytest.raises(CarrierViolation):
    (TensorElement.empty('comm') + word(comm, 'a')).require_plus()

def test_tensor_equality_ignores_plus(comm):
  assert word(comm, 'a', plus=True) == word(comm, 'a', plus=False)

def test_tensor_mode_mismatch(comm, noncomm):
  with pytest.raises(ModeMismatch):
    word(comm, 'a') + word(noncomm, 'a')

def test_word_normalize(comm):
  a, b = comm.element('a'), comm.element('b')
  assert word_normalize([a + b, 2 * a]) == tensor(comm, (2, ['a', 'a']), (2, ['b', 'a']))

def test_concat_and_lengths(comm):
  X = word(comm, 'a') + word(comm, 'b', 'b')
  Y = tensor_concat(X, word(comm, 'a*b'))
  assert Y.lengths == [2, 3]
  assert Y == tensor(comm, (1, ['a', 'a*b']), (1, ['b', 'b', 'a*b']))

def _words_up_to(algebra, n):
  letters = [ algebra.monomial(x) for x in algebra.names ]
  return [ w for k in range(n + 1) for w in product(letters, repeat=k) ]

def test_concat_associative_with_unit(noncomm):
  one = TensorElement.empty('noncomm')
  words = _words_up_to(noncomm, 6)
  triples = ( (u, v, w) for u in words for v in words if len(u) + len(v) <= 6 for w in words if len(u) + len(v) + len(w) <= 6 )
  for u, v, w in triples:
    x, y, z = ( TensorElement('noncomm', {t: 1}) for t in (u, v, w) )
    assert tensor_concat(tensor_concat(x, y), z) == tensor_concat(x, tensor_concat(y, z))
    assert tensor_concat(one, x) == x == tensor_concat(x, one)

def test_linear_combine(comm):
  a, ab = word(comm, 'a'), word(comm, 'a', 'b')
  result = linear_combine([(2, a), (Fraction(-1, 2), ab), (-2, a)])
  assert result == word(comm, 'a', 'b', coeff=Fraction(-1, 2))
  assert result.plus
  assert linear_combine([], mode='comm').is_zero
  with pytest.raises(ValueError):
    linear_combine([])

def test_unit_word(comm):
  assert TensorElement.unit_word('comm', 2) == word(comm, '1', '1')
  assert TensorElement.unit_word('comm', 2).plus

def test_grade_decompose(comm):
  X = TensorElement.empty('comm') + word(comm, 'a') + word(comm, 'a', 'b', coeff=3)
  parts = grade_decompose(X)
  assert sorted(parts) == [0, 1, 2]
  assert parts[2] == word(comm, 'a', 'b', coeff=3)

def test_two_leg_policies(comm):
  a = word(comm, 'a')
  pair = TwoLegElement.from_pair(a, word(comm, 'b', 'a'))
  assert pair.render() == '(a)⊗(b|a)'
  with pytest.raises(CarrierViolation):
    pair.with_policy(COMODULE)
  assert pair.with_policy(SQUARE).policy == SQUARE
  with pytest.raises(CarrierViolation):
    TwoLegElement.from_pair(TensorElement.empty('comm'), a, policy=SQUARE)

def test_base_element_mode_checked(comm):
  with pytest.raises(ModeMismatch):
    BaseElement('noncomm', {Monomial.unit('comm'): 1})
