# SPDX-License-Identifier: Apache-2.0

import pytest
from fractions import Fraction

from pyrota.core.errors import CarrierViolation, MissingCoproductRule, ModeMismatch, UsageError
from pyrota.algebra.base import BaseAlgebra
from pyrota.algebra.tensor import TensorElement
from pyrota.algebra.legs import TwoLegElement, COMODULE, SQUARE
from pyrota.shuffle.kind import RSH, LSH, qsh
from pyrota.operators.identity import IdentityKind, check_identity, ASSOCIATIVE, COMMUTATIVE, UNITAL, NIJENHUIS
from pyrota.operators.samples import SamplePolicy, FixedSamples
from pyrota.bialgebra.amalg import SquareAmbient, Sandwich, vanishes, square_samples, sandwich_apply
from pyrota.bialgebra.case1 import (
  delta_case1, counit_case1, shift_factor, check_case1_laws, check_case1_morphism, check_case1_functor
)
from pyrota.bialgebra.case2 import delta_case2, counit_case2, bracket_star, check_case2_laws, check_case2_morphism
from pyrota.bialgebra.primitives import primitives_at_bound, check_primitives, primitive_basis_words

from tests.util import word

KINDS = [RSH, LSH, qsh(1), qsh(Fraction(-1, 2))]

def laws_policy(algebra, max_len=2):
  letters = [ algebra.unit_monomial() ] + algebra.monomials_up_to(2)
  return SamplePolicy(algebra, plus=True, max_len=max_len, random_len=3, random_samples=5, seed=9, letters=letters)

def pair(algebra, left, right):
  return TwoLegElement.from_pair(word(algebra, *left), word(algebra, *right))

@pytest.mark.parametrize('kind, expected', [
  (RSH, 1), (LSH, 1), (qsh(2), -2), (qsh(0), 0)
])
def test_shift_factor(kind, expected):
  assert shift_factor(kind) == expected

def test_delta_case1_primitive(hopf):
  delta = delta_case1(RSH, word(hopf, 'h'), hopf)
  assert delta.policy == COMODULE
  assert delta == pair(hopf, ['h'], ['1']) + pair(hopf, ['1'], ['h'])

def test_delta_case1_collects_right_leg(hopf):
  delta = delta_case1(LSH, word(hopf, 'g', 'h'), hopf)
  expected = pair(hopf, ['g', 'h'], ['g']) + pair(hopf, ['g', '1'], ['g*h'])
  assert delta == expected

def test_counit_case1(hopf):
  assert counit_case1(qsh(3), word(hopf, 'g', 'g', 'g'), hopf) == 9
  assert counit_case1(RSH, word(hopf, 'g', 'h'), hopf) == 0
  assert counit_case1(LSH, word(hopf, '1', 'g'), hopf) == 1

def test_case1_needs_rules_and_carrier(comm, hopf):
  with pytest.raises(MissingCoproductRule):
    delta_case1(RSH, word(comm, 'a'), comm)
  with pytest.raises(CarrierViolation):
    delta_case1(RSH, TensorElement.empty('comm'), hopf)

def test_case1_needs_commutative_base():
  algebra = BaseAlgebra.from_spec('noncomm', 'h:primitive')
  with pytest.raises(ModeMismatch):
    delta_case1(RSH, word(algebra, 'h'), algebra)

@pytest.mark.parametrize('kind', KINDS)
def test_case1_laws(kind, hopf):
  report = check_case1_laws(kind, hopf, laws_policy(hopf))
  assert report.passed, report.counterexample

@pytest.mark.parametrize('kind', KINDS)
def test_case1_morphism(kind, hopf):
  report = check_case1_morphism(kind, hopf, laws_policy(hopf, max_len=1))
  assert report.passed, report.counterexample

def test_case1_functor():
  source = BaseAlgebra.from_spec('comm', 'h:primitive,k:primitive')
  target = BaseAlgebra.from_spec('comm', 'p:primitive')
  report = check_case1_functor(RSH, source, target, {'h': 'p', 'k': 'p'}, laws_policy(source))
  assert report.passed, report.counterexample

def test_case1_functor_rejects_rule_change(hopf):
  target = BaseAlgebra.from_spec('comm', 'p:primitive,q:primitive')
  with pytest.raises(ModeMismatch):
    check_case1_functor(RSH, hopf, target, {'h': 'p', 'g': 'q'}, laws_policy(hopf))

def test_delta_case2(comm):
  delta = delta_case2(word(comm, 'a', 'b'))
  assert delta == pair(comm, ['a', 'b'], ['1']) + pair(comm, ['1', '1'], ['a*b'])
  assert delta_case2(word(comm, '1', '1')) == pair(comm, ['1', '1'], ['1'])

def test_counit_case2_and_bracket(comm):
  x = word(comm, '1', '1', coeff=2) + word(comm, 'a') + word(comm, '1')
  assert counit_case2(x) == 3
  assert bracket_star(word(comm, 'a', '1', 'b')) == word(comm, 'a*b')

def test_case2_needs_commutative_base(noncomm):
  with pytest.raises(ModeMismatch):
    delta_case2(word(noncomm, 'a'))

def test_case2_laws(comm):
  report = check_case2_laws(laws_policy(comm))
  assert report.passed, report.counterexample

def test_case2_morphism(comm):
  report = check_case2_morphism(laws_policy(comm, max_len=1))
  assert report.passed, report.counterexample

@pytest.mark.parametrize('legs, expected', [
  ((('a',), ('b',), ('a', 'b'), ('1', '1')), True),
  ((('a',), ('b',), ('b',), ('1',)), True),
  ((('a',), ('1',), ('1',), ('b',)), True),
  ((('a',), ('1',), ('1',), ('1',)), False),
  ((('1',), ('a',), ('1',), ('b',)), False),
  ((('a',), ('b',), ('1', '1'), ('b',)), False)
])
def test_vanishes(comm, legs, expected):
  words = [ tuple( comm.parse_monomial(x) for x in leg ) for leg in legs ]
  assert vanishes(*words) is expected

def test_amalg_unit_and_vanishing(comm):
  square = SquareAmbient('comm')
  x = pair(comm, ['a'], ['1']).with_policy(SQUARE)
  y = pair(comm, ['1'], ['b']).with_policy(SQUARE)
  assert square.mul(square.unit(), x) == x
  assert square.mul(x, y).is_zero
  assert square.label == 'amalg(rsh)'

@pytest.mark.parametrize('tag', [ASSOCIATIVE, COMMUTATIVE, UNITAL])
def test_amalg_laws(tag, comm):
  report = check_identity(IdentityKind(tag), None, SquareAmbient('comm'), FixedSamples(square_samples(comm)))
  assert report.passed, report.counterexample

def test_sandwich_is_nijenhuis(comm):
  samples = FixedSamples(square_samples(comm))
  report = check_identity(IdentityKind(NIJENHUIS), Sandwich(), SquareAmbient('comm'), samples)
  assert report.passed, report.counterexample
  assert sandwich_apply(pair(comm, ['a'], ['b'])) == pair(comm, ['1', 'a'], ['b'])

def test_primitive_basis_words(comm):
  single = BaseAlgebra.from_spec('comm', 'a')
  words = primitive_basis_words(single, 2)
  assert [ len(w) for w in words ] == [1] * 3 + [2] * 6

def test_primitives_case2():
  single = BaseAlgebra.from_spec('comm', 'a')
  basis = primitives_at_bound(2, RSH, 3, single)
  assert basis == [ word(single, x) for x in ('a', 'a^2', 'a^3') ]

def test_primitives_case1():
  primitive = BaseAlgebra.from_spec('comm', 'h:primitive')
  grouplike = BaseAlgebra.from_spec('comm', 'g:grouplike')
  assert primitives_at_bound(1, RSH, 3, primitive) == [word(primitive, 'h')]
  assert primitives_at_bound(1, RSH, 2, grouplike) == []

def test_check_primitives():
  single = BaseAlgebra.from_spec('comm', 'a')
  expected = [ word(single, x) for x in ('a^3', 'a', 'a^2') ]
  report = check_primitives(2, RSH, 3, single, expected)
  assert report.passed, report.counterexample
  report = check_primitives(2, RSH, 2, single, expected)
  assert not report.passed

@pytest.mark.parametrize('case, bound, mode', [
  (3, 2, 'comm'),
  (2, 0, 'comm'),
  (2, 5, 'comm'),
  (2, 2, 'noncomm')
])
def test_primitives_rejects(case, bound, mode):
  algebra = BaseAlgebra.from_spec(mode, 'a')
  with pytest.raises(UsageError):
    primitives_at_bound(case, RSH, bound, algebra)
