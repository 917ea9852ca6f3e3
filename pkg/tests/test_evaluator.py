# SPDX-License-Identifier: Apache-2.0

import pytest
from fractions import Fraction

from pyrota.core.errors import DslTypeError, UnknownGenerator, UsageError
from pyrota.core.session import Session
from pyrota.algebra.base import BaseAlgebra
from pyrota.algebra.legs import TwoLegElement
from pyrota.shuffle.kind import RSH, qsh
from pyrota.dsl.evaluator import evaluate

from tests.util import word, tensor

@pytest.fixture
def session(comm):
  return Session(comm, qsh(1))

@pytest.fixture
def hopf_session(hopf):
  return Session(hopf, qsh(1), case=1)

@pytest.mark.parametrize('src, expected', [
  ('lsh([a];[b])', '(a|b) + (b|a) - (a*b|1)'),
  ('rsh([a];[b])', '(a|b) + (b|a) - (1|a*b)'),
  ('2 + [a]', '2*1_K + (a)'),
  ('(a + b)^2', 'a^2 + 2*a*b + b^2'),
  ('2*a - 1', '-1 + 2*a'),
  ('Pu(a;[b])', '(a|b)'),
  ('bsh([a];[b])', '(a*b)'),
  ('[a*b, 1]', '(a*b|1)')
])
def test_evaluate_renders(src, expected, session):
  assert evaluate(src, session).render() == expected

def test_scalar_arithmetic(session):
  assert evaluate('1/2 + 1/3', session) == Fraction(5, 6)
  assert evaluate('(1/2)^2 - 1', session) == Fraction(-3, 4)

def test_right_shift_adds_unit_letter(session):
  assert evaluate('P([a,b]) - [1,a,b]', session).is_zero

def test_qsh_takes_optional_weight(comm, session):
  default = evaluate('qsh([a];[b])', session)
  assert default == evaluate('qsh([a];[b];1)', session)
  assert evaluate('qsh([a];[b];0)', session) == evaluate('sh([a];[b])', session)
  assert default == tensor(comm, (1, ['a', 'b']), (1, ['b', 'a']), (1, ['a*b']))

def test_omega_and_tilde(comm, session):
  assert evaluate('omega([a*b])', session) == word(comm, 'a*b', '1', coeff=-1)
  assert evaluate('tilde([a])', session) == tensor(comm, (-1, ['a']), (-1, ['1', 'a']))

def test_dagger():
  session = Session(BaseAlgebra.from_spec('noncomm', 'a~b,b'), qsh(1))
  algebra = session.algebra
  assert evaluate('dagger([a*a, b])', session) == word(algebra, 'b*b', 'a')
  assert evaluate('dagger(a*b)', session) == algebra.mul(algebra.element('a'), algebra.element('b'))

def test_coproduct_and_counit(hopf, hopf_session):
  delta = evaluate('delta([h])', hopf_session)
  assert isinstance(delta, TwoLegElement)
  expected = TwoLegElement.from_pair(word(hopf, '1'), word(hopf, 'h')) + TwoLegElement.from_pair(word(hopf, 'h'), word(hopf, '1'))
  assert delta == expected
  assert evaluate('eps([g,g])', hopf_session) == -1

def test_case2_coproduct(comm, session):
  expected = TwoLegElement.from_pair(word(comm, 'a', 'b'), word(comm, '1')) \
    + TwoLegElement.from_pair(word(comm, '1', '1'), word(comm, 'a*b'))
  assert evaluate('delta([a,b])', session) == expected
  assert evaluate('eps(2*[1,1] + [a])', session) == 2
  assert evaluate('bstar([a,1,b])', session) == word(comm, 'a*b')

def test_amalg_unit(session):
  result = evaluate('amalg(delta([a]); delta([1]))', session)
  assert isinstance(result, TwoLegElement)
  assert result == evaluate('delta([a])', session)

def test_tridendriform_calls(comm, session):
  assert evaluate('dot([a];[b])', session) == word(comm, 'a*b', '1', coeff=-1)
  assert evaluate('dot1([a];[b])', session) == word(comm, 'a*b')
  assert evaluate('prec1([a];[b]) + succ1([a];[b]) + dot1([a];[b])', session) == evaluate('star1([a];[b])', session)

@pytest.mark.parametrize('src', [
  'a + [a]',
  '[a]*[b]',
  'P',
  'P([a];[b])',
  'Pu(a+b;[b])',
  'qsh([a];[b];a)',
  'P(a)',
  'amalg([a];[b])'
])
def test_type_errors(src, session):
  with pytest.raises(DslTypeError):
    evaluate(src, session)

def test_counit_needs_tensor(hopf_session):
  with pytest.raises(DslTypeError):
    evaluate('eps(delta([h]))', hopf_session)

def test_undeclared_generator(session):
  with pytest.raises(UnknownGenerator):
    evaluate('[z]', session)

def test_session_rejects_colliding_names():
  with pytest.raises(UsageError):
    Session(BaseAlgebra.from_spec('comm', 'P,a'), RSH)

@pytest.mark.parametrize('changes', [
  {'case': 3},
  {'engine': 'magic'},
  {'output_format': 'yaml'},
  {'max_len': 0},
  {'random_samples': -1}
])
def test_session_validation(changes, comm):
  with pytest.raises(UsageError):
    Session(comm, RSH, **changes)
