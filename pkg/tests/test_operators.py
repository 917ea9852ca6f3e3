# SPDX-License-Identifier: Apache-2.0

import pytest
from fractions import Fraction

from pyrota.core.errors import CarrierViolation, ModeMismatch, NotMultiplicative, UnknownGenerator, UsageError
from pyrota.algebra.tensor import TensorElement
from pyrota.shuffle.kind import SH, RSH, LSH, qsh
from pyrota.operators.ambient import TensorAmbient
from pyrota.operators.shift import RightShift, LeftShift, LetterShift
from pyrota.operators.conjugate import Conjugate, RB_TILDE, NIJ_TILDE, TD_TILDE
from pyrota.operators.double import DoubleAmbient, double_product, STAR_R, STAR_N, STAR_P
from pyrota.operators.identity import (
  IdentityKind, check_identity, td_weight, ROTA_BAXTER, NIJENHUIS, TD, AVERAGE, RB_HOMOMORPHISM,
  NIJ_HOMOMORPHISM, CONJUGATE_RB_HOMOMORPHISM, NIJ_CONJUGATE_HOMOMORPHISM, NIJ_CONJUGATE_LITERAL,
  TD_CENTER, TD_CONJUGATE_ROTA_BAXTER, ASSOCIATIVE
)
from pyrota.operators.samples import FixedSamples, SamplePolicy
from pyrota.operators.spitzer import spitzer_verify, TruncatedSeries
from pyrota.operators.lift import lift_morphism, check_lift, check_identity_lift

from tests.util import word, tensor

P = RightShift()
Q = LeftShift()

@pytest.fixture
def plain_samples(small_samples):
  return small_samples.derive(plus=False)

def small_policy(algebra, plus):
  return SamplePolicy(algebra, plus=plus, max_len=2, random_len=3, random_samples=5, seed=3)

def ambient(kind, plus=False, mode='comm'):
  return TensorAmbient(mode, kind, plus=plus)

def assert_holds(report):
  assert report.passed, report.counterexample
  assert report.ok
  assert report.samples > 0

def test_right_shift(comm):
  assert P(word(comm, 'a', 'b')) == word(comm, '1', 'a', 'b')
  assert P(TensorElement.empty('comm')) == word(comm, '1')
  assert P(TensorElement.empty('comm')).plus

def test_left_shift(comm):
  assert Q(word(comm, 'a') + word(comm, 'b', coeff=2)) == tensor(comm, (1, ['a', '1']), (2, ['b', '1']))

def test_letter_shift(comm):
  shift = LetterShift(comm.monomial('a'))
  assert shift.name == 'P^(a)'
  assert shift(word(comm, 'b')) == word(comm, 'a', 'b')

def test_power_and_composition(comm):
  assert P.power(2)(word(comm, 'a')) == word(comm, '1', '1', 'a')
  assert P.power(0)(word(comm, 'a')) == word(comm, 'a')

@pytest.mark.parametrize('theta', [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 3)])
@pytest.mark.parametrize('plus', [False, True])
def test_rota_baxter_on_qsh(theta, plus, small_samples):
  report = check_identity(IdentityKind(ROTA_BAXTER, theta), P, ambient(qsh(theta), plus), small_samples.derive(plus=plus))
  assert_holds(report)

@pytest.mark.parametrize('theta', [Fraction(1), Fraction(2)])
def test_rota_baxter_conjugate(theta, small_samples):
  tilde = Conjugate(P, RB_TILDE, theta=theta)
  assert_holds(check_identity(IdentityKind(ROTA_BAXTER, theta), tilde, ambient(qsh(theta), True), small_samples))

def test_rota_baxter_fails_on_rsh(plain_samples):
  report = check_identity(IdentityKind(ROTA_BAXTER, 1), P, ambient(RSH), plain_samples, expected=False)
  assert not report.passed
  assert report.ok
  assert set(report.counterexample) == {'inputs', 'lhs', 'rhs', 'law'}

def test_letter_shift_is_weight_zero(plain_samples, comm):
  shift = LetterShift(comm.monomial('a'))
  assert_holds(check_identity(IdentityKind(ROTA_BAXTER, 0), shift, ambient(SH), plain_samples))

@pytest.mark.parametrize('kind, plus', [(RSH, False), (RSH, True), (LSH, False)])
def test_nijenhuis(kind, plus, small_samples):
  assert_holds(check_identity(IdentityKind(NIJENHUIS), P, ambient(kind, plus), small_samples.derive(plus=plus)))

def test_nijenhuis_noncomm_lsh(noncomm):
  samples = small_policy(noncomm, plus=False)
  assert_holds(check_identity(IdentityKind(NIJENHUIS), P, ambient(LSH, mode='noncomm'), samples))

def test_nijenhuis_conjugates(small_samples):
  rsh_plus = ambient(RSH, True)
  lsh_plus = ambient(LSH, True)
  identity = IdentityKind(NIJENHUIS)
  assert_holds(check_identity(identity, Conjugate(P, NIJ_TILDE), rsh_plus, small_samples))
  assert_holds(check_identity(identity, Conjugate(P, TD_TILDE, ambient=lsh_plus), lsh_plus, small_samples))

def test_left_shift_conjugate_vanishes(small_samples, comm):
  """On rsh+ the TD conjugate of Q_A is the zero operator."""
  rsh_plus = ambient(RSH, True)
  tilde = Conjugate(Q, TD_TILDE, ambient=rsh_plus)
  for (x,) in small_samples.tuples(1):
    assert tilde(x).is_zero

def test_td(plain_samples, small_samples):
  for op, amb, samples in ((P, ambient(LSH), plain_samples), (P, ambient(LSH, True), small_samples), (Q, ambient(RSH, True), small_samples)):
    assert_holds(check_identity(IdentityKind(TD), op, amb, samples))
    assert_holds(check_identity(IdentityKind(TD_CENTER), op, amb, samples))
    assert_holds(check_identity(td_weight(op, amb), op, amb, samples))
    assert_holds(check_identity(IdentityKind(TD_CONJUGATE_ROTA_BAXTER), op, amb, samples))

def test_td_weight_label(comm):
  kind = td_weight(P, ambient(LSH))
  assert kind.label == 'rota_baxter(-(1))'

def test_average(plain_samples):
  assert_holds(check_identity(IdentityKind(AVERAGE), P, ambient(LSH), plain_samples))

@pytest.mark.parametrize('theta', [Fraction(1), Fraction(1, 3)])
def test_double_rota_baxter(theta, comm):
  base = ambient(qsh(theta), True)
  samples = small_policy(comm, plus=True).derive(random_samples=0, triple_len=1)
  double = DoubleAmbient(base, STAR_R, P, theta)
  assert_holds(check_identity(IdentityKind(ASSOCIATIVE), None, double, samples))
  assert_holds(check_identity(IdentityKind(ROTA_BAXTER, theta), P, double, samples))
  assert_holds(check_identity(IdentityKind(RB_HOMOMORPHISM, theta), P, base, samples))
  assert_holds(check_identity(IdentityKind(CONJUGATE_RB_HOMOMORPHISM, theta), P, base, samples))

def test_double_nijenhuis(plain_samples):
  rsh = ambient(RSH)
  assert_holds(check_identity(IdentityKind(ASSOCIATIVE), None, DoubleAmbient(rsh, STAR_N, P), plain_samples.derive(triple_len=1)))
  assert_holds(check_identity(IdentityKind(NIJ_HOMOMORPHISM), P, rsh, plain_samples))
  assert_holds(check_identity(IdentityKind(NIJ_CONJUGATE_HOMOMORPHISM), P, rsh, plain_samples))
  literal = check_identity(IdentityKind(NIJ_CONJUGATE_LITERAL), P, rsh, plain_samples, expected=False)
  assert not literal.passed
  assert literal.ok

def test_star_p(small_samples):
  lsh_plus = ambient(LSH, True)
  double = DoubleAmbient(lsh_plus, STAR_P, P)
  samples = small_samples.derive(triple_len=1)
  assert_holds(check_identity(IdentityKind(ASSOCIATIVE), None, double, samples))
  assert_holds(check_identity(IdentityKind(NIJENHUIS), P, double, samples))

def test_double_product_needs_weight(comm):
  x = word(comm, 'a')
  with pytest.raises(UsageError):
    double_product(STAR_R, x, x, ambient(SH), P)
  with pytest.raises(UsageError):
    DoubleAmbient(ambient(SH), STAR_P, P).unit()

def test_conjugate_arguments():
  with pytest.raises(UsageError):
    Conjugate(P, RB_TILDE)
  with pytest.raises(UsageError):
    Conjugate(P, TD_TILDE)
  with pytest.raises(UsageError):
    Conjugate(P, 'hat')

def test_identity_kind_validation():
  with pytest.raises(UsageError):
    IdentityKind('jacobi')
  with pytest.raises(UsageError):
    IdentityKind(ROTA_BAXTER)
  assert IdentityKind(ROTA_BAXTER, Fraction(1, 3)).label == 'rota_baxter(1/3)'

def test_fixed_samples(comm):
  x, y = word(comm, 'a'), word(comm, 'b')
  samples = FixedSamples([x, y])
  assert len(list(samples.tuples(2))) == 4

def test_sample_policy_is_reproducible(small_samples):
  first = [ tuple(x.render() for x in t) for t in small_samples.tuples(2) ]
  second = [ tuple(x.render() for x in t) for t in small_samples.derive().tuples(2) ]
  assert first == second
  assert all( not x.terms.get(()) for t in small_samples.tuples(1) for x in t )

@pytest.mark.parametrize('theta', [0, 1, -2, Fraction(1, 3)])
def test_spitzer(theta, comm):
  report = spitzer_verify(theta, word(comm, 'a', plus=True), 4)
  assert_holds(report)

def test_spitzer_composite_argument(comm):
  a = word(comm, 'a') + word(comm, 'b', 'a', coeff=Fraction(1, 2))
  assert_holds(spitzer_verify(1, a, 3))

def test_spitzer_order_cap(comm):
  with pytest.raises(UsageError):
    spitzer_verify(1, word(comm, 'a'), 7, cap=6)
  with pytest.raises(UsageError):
    spitzer_verify(1, word(comm, 'a'), 0)

def test_spitzer_needs_commutative_base(noncomm):
  with pytest.raises(ModeMismatch):
    spitzer_verify(1, word(noncomm, 'a'), 2)

def test_series_exp_needs_zero_constant(comm):
  amb = ambient(qsh(1), True)
  with pytest.raises(UsageError):
    TruncatedSeries.one(amb, 2).exp()

@pytest.mark.parametrize('kind', [qsh(1), RSH, LSH])
def test_identity_lift(kind, small_samples):
  assert_holds(check_identity_lift(kind, small_samples.derive(max_len=2)))

@pytest.mark.parametrize('kind', [qsh(1), RSH, LSH])
def test_substitution_lift(kind, comm, small_samples):
  lift = lift_morphism({'a': word(comm, 'b', plus=True)}, kind, comm)
  assert lift(word(comm, 'a', 'a')) == lift.ambient.mul(word(comm, 'b'), P(word(comm, 'b')))
  assert_holds(check_lift(lift, kind, small_samples))

def test_lift_rejects_noncommuting_images(comm, noncomm):
  phi = {'a': word(noncomm, 'a', plus=True), 'b': word(noncomm, 'b', plus=True)}
  with pytest.raises(NotMultiplicative):
    lift_morphism(phi, qsh(1), comm, target_mode='noncomm')

def test_lift_needs_every_image(comm, noncomm):
  with pytest.raises(UnknownGenerator):
    lift_morphism({'a': word(noncomm, 'a')}, qsh(1), comm, target_mode='noncomm')
  with pytest.raises(UnknownGenerator):
    lift_morphism({'z': word(comm, 'a')}, qsh(1), comm)

def test_lift_rejects_empty_word(comm):
  lift = lift_morphism({}, qsh(1), comm)
  with pytest.raises(CarrierViolation):
    lift(TensorElement.empty('comm'))
