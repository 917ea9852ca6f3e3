# SPDX-License-Identifier: Apache-2.0

"""
The named suites run by `pyrota check`.

Each suite builder takes a Session and returns FunctionChecks. Check functions
and their arguments are module-level objects so that the engine can ship them
to worker processes.
"""

from fractions import Fraction

from pyrota.core.errors import UsageError
from pyrota.core.constants import SUITE_ALL
from pyrota.algebra.base import BaseAlgebra
from pyrota.algebra.monomial import COMMUTATIVE, NONCOMMUTATIVE
from pyrota.algebra.tensor import TensorElement
from pyrota.shuffle.kind import SH, RSH, LSH, QUASI_SHUFFLE, qsh
from pyrota.operators.ambient import TensorAmbient
from pyrota.operators.shift import RightShift, LeftShift, LetterShift
from pyrota.operators.conjugate import Conjugate, RB_TILDE, NIJ_TILDE, TD_TILDE
from pyrota.operators.double import DoubleAmbient, STAR_R, STAR_N, STAR_P
from pyrota.operators.identity import (
  IdentityKind, check_identity, td_weight, ROTA_BAXTER, NIJENHUIS, TD, AVERAGE, RB_HOMOMORPHISM,
  NIJ_HOMOMORPHISM, CONJUGATE_RB_HOMOMORPHISM, NIJ_CONJUGATE_HOMOMORPHISM, NIJ_CONJUGATE_LITERAL,
  TD_CENTER, TD_CONJUGATE_ROTA_BAXTER, ASSOCIATIVE, UNITAL
)
from pyrota.operators.identity import COMMUTATIVE as COMMUTATIVE_LAW
from pyrota.operators.samples import FixedSamples, DegreeBoundedSamples
from pyrota.operators.spitzer import spitzer_verify
from pyrota.operators.lift import lift_morphism, check_lift, check_identity_lift
from pyrota.dendriform.structure import LeftShiftTridend, QuasiShuffleTridend
from pyrota.dendriform.axioms import check_tridend_axioms, check_star, check_star_associative
from pyrota.dendriform.omega import check_omega_morphism, check_omega_injective, check_decompose_roundtrip
from pyrota.dendriform.involution import check_involutive_qone, check_involutive_plus_lsh, check_involutive_free
from pyrota.bialgebra.amalg import SquareAmbient, Sandwich, square_samples
from pyrota.bialgebra.case1 import check_case1_laws, check_case1_morphism, check_case1_functor
from pyrota.bialgebra.case2 import check_case2_laws, check_case2_morphism
from pyrota.bialgebra.primitives import check_primitives
from pyrota.check.abstract import FunctionCheck
from pyrota.check import differential

RB_WEIGHTS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 3))
DOUBLE_WEIGHTS = (Fraction(1), Fraction(1, 3))
SPITZER_WEIGHTS = (Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 3))

class SuiteBuilder:
  """
  Collects the checks of one suite, prefixing every name with the suite name.
  """

  def __init__(self, suite):
    self.suite = suite
    self.checks = []

  def add(self, name, func, *args, expected=True, **kwargs):
    full = '{}/{}'.format(self.suite, name)
    self.checks.append(FunctionCheck(full, func, args, kwargs, suite=self.suite, expected=expected))

  def identity(self, name, kind, op, ambient, samples, expected=True):
    self.add(name, check_identity, kind, op, ambient, samples, expected=expected)

def _distinct_kinds(*kinds):
  return list(dict.fromkeys(kinds))

def _commutative(session):
  if session.mode == COMMUTATIVE:
    return session.algebra
  return BaseAlgebra(COMMUTATIVE, session.algebra.names)

def _noncommutative(session):
  if session.mode == NONCOMMUTATIVE:
    return session.algebra
  return BaseAlgebra(NONCOMMUTATIVE, session.algebra.names)

def _configured_operator_suite(session, suite, tag):
  """
  P_A on the explicitly chosen product, plain and on T+(A).
  """
  build = SuiteBuilder(suite)
  weight = session.theta if session.kind.tag == QUASI_SHUFFLE else None
  if tag == ROTA_BAXTER and weight is None:
    weight = Fraction(1)
  identity = IdentityKind(tag, weight) if tag == ROTA_BAXTER else IdentityKind(tag)
  for plus in (False, True):
    ambient = session.ambient(plus)
    build.identity('{}/P_A/{}'.format(identity.label, ambient.label), identity, RightShift(), ambient, session.samples(plus))
  return build.checks

def rb_suite(session):
  if session.explicit_product:
    return _configured_operator_suite(session, 'rb', ROTA_BAXTER)
  build = SuiteBuilder('rb')
  P = RightShift()
  for theta in RB_WEIGHTS:
    identity = IdentityKind(ROTA_BAXTER, theta)
    for plus in (False, True):
      ambient = session.ambient(plus, qsh(theta))
      build.identity('{}/P_A/{}'.format(identity.label, ambient.label), identity, P, ambient, session.samples(plus))
    ambient = session.ambient(True, qsh(theta))
    tilde = Conjugate(P, RB_TILDE, theta=theta)
    build.identity('{}/{}/{}'.format(identity.label, tilde.name, ambient.label), identity, tilde, ambient, session.samples(True))
  letter = LetterShift(session.algebra.monomial(session.algebra.names[0]))
  ambient = session.ambient(False, SH)
  build.identity('rota_baxter(0)/{}/sh'.format(letter.name), IdentityKind(ROTA_BAXTER, 0), letter, ambient, session.samples())
  build.identity('rota_baxter(1)/P_A/rsh', IdentityKind(ROTA_BAXTER, 1), P, session.ambient(False, RSH), session.samples(), expected=False)
  for theta in DOUBLE_WEIGHTS:
    base = session.ambient(True, qsh(theta))
    double = DoubleAmbient(base, STAR_R, P, theta)
    samples = session.samples(True, max_len=2)
    build.identity('associative/{}'.format(double.label), IdentityKind(ASSOCIATIVE), None, double, samples)
    build.identity('rota_baxter/{}'.format(double.label), IdentityKind(ROTA_BAXTER, theta), P, double, samples)
    build.identity('rb_homomorphism/{}'.format(base.label), IdentityKind(RB_HOMOMORPHISM, theta), P, base, session.samples(True))
    build.identity('conjugate_rb_homomorphism/{}'.format(base.label), IdentityKind(CONJUGATE_RB_HOMOMORPHISM, theta), P, base, session.samples(True))
  return build.checks

def nijenhuis_suite(session):
  if session.explicit_product:
    return _configured_operator_suite(session, 'nijenhuis', NIJENHUIS)
  build = SuiteBuilder('nijenhuis')
  P, Q = RightShift(), LeftShift()
  identity = IdentityKind(NIJENHUIS)
  for plus in (False, True):
    ambient = session.ambient(plus, RSH)
    build.identity('P_A/{}'.format(ambient.label), identity, P, ambient, session.samples(plus))
  build.identity('P_A/lsh', identity, P, session.ambient(False, LSH), session.samples())
  if session.mode == COMMUTATIVE:
    noncomm = _noncommutative(session)
    build.identity('P_A/lsh[noncomm]', identity, P, TensorAmbient(noncomm.mode, LSH, engine=session.engine), session.samples().derive(algebra=noncomm))
  rsh_plus = session.ambient(True, RSH)
  lsh_plus = session.ambient(True, LSH)
  build.identity('N~(P_A)/rsh+', identity, Conjugate(P, NIJ_TILDE), rsh_plus, session.samples(True))
  build.identity('P~(Q_A)/rsh+', identity, Conjugate(Q, TD_TILDE, ambient=rsh_plus), rsh_plus, session.samples(True))
  build.identity('P~(P_A)/lsh+', identity, Conjugate(P, TD_TILDE, ambient=lsh_plus), lsh_plus, session.samples(True))
  rsh = session.ambient(False, RSH)
  build.identity('associative/star_N/rsh', IdentityKind(ASSOCIATIVE), None, DoubleAmbient(rsh, STAR_N, P), session.samples(max_len=2))
  build.identity('nij_homomorphism/rsh', IdentityKind(NIJ_HOMOMORPHISM), P, rsh, session.samples())
  build.identity('nij_conjugate_homomorphism/rsh', IdentityKind(NIJ_CONJUGATE_HOMOMORPHISM), P, rsh, session.samples())
  build.identity('nij_conjugate_literal/rsh', IdentityKind(NIJ_CONJUGATE_LITERAL), P, rsh, session.samples(), expected=False)
  build.identity('associative/star_P/lsh+', IdentityKind(ASSOCIATIVE), None, DoubleAmbient(lsh_plus, STAR_P, P), session.samples(True, max_len=2))
  build.identity('associative/star_P/rsh+', IdentityKind(ASSOCIATIVE), None, DoubleAmbient(rsh_plus, STAR_P, Q), session.samples(True, max_len=2))
  build.identity('P_A/star_P/lsh+', identity, P, DoubleAmbient(lsh_plus, STAR_P, P), session.samples(True, max_len=2))
  return build.checks

def td_suite(session):
  if session.explicit_product:
    return _configured_operator_suite(session, 'td', TD)
  build = SuiteBuilder('td')
  P, Q = RightShift(), LeftShift()
  cases = [
    (P, session.ambient(False, LSH), False),
    (P, session.ambient(True, LSH), True),
    (Q, session.ambient(True, RSH), True)
  ]
  for op, ambient, plus in cases:
    samples = session.samples(plus)
    build.identity('{}/{}'.format(op.name, ambient.label), IdentityKind(TD), op, ambient, samples)
    build.identity('td_center/{}/{}'.format(op.name, ambient.label), IdentityKind(TD_CENTER), op, ambient, samples)
    build.identity('rota_baxter(-P(1))/{}/{}'.format(op.name, ambient.label), td_weight(op, ambient), op, ambient, samples)
    if session.mode == COMMUTATIVE:
      build.identity('td_conjugate_rota_baxter/{}/{}'.format(op.name, ambient.label), IdentityKind(TD_CONJUGATE_ROTA_BAXTER), op, ambient, samples)
  noncomm = _noncommutative(session)
  build.add('unit_words/rsh[noncomm]', differential.check_unit_words, RSH, session.samples().derive(algebra=noncomm), session.engine)
  return build.checks

def average_suite(session):
  if session.explicit_product:
    return _configured_operator_suite(session, 'average', AVERAGE)
  build = SuiteBuilder('average')
  build.identity('P_A/lsh', IdentityKind(AVERAGE), RightShift(), session.ambient(False, LSH), session.samples())
  return build.checks

def _qone_letters(algebra):
  a = algebra.monomial(algebra.names[0])
  b = algebra.monomial(algebra.names[-1])
  return [a, b, a * b]

def tridend_suite(session):
  build = SuiteBuilder('tridend')
  algebra = session.algebra
  unit = algebra.unit_monomial()
  plus_lsh = LeftShiftTridend(session.mode, session.engine)
  qone = QuasiShuffleTridend(session.mode, session.engine)
  lsh_samples = session.samples(True, letters=[unit] + [ algebra.monomial(x) for x in algebra.names[:2] ])
  qone_samples = session.samples(True, letters=_qone_letters(algebra))
  for s, samples in ((plus_lsh, lsh_samples), (qone, qone_samples)):
    build.add('axioms/{}'.format(s.carrier), check_tridend_axioms, s, samples)
    build.add('star/{}'.format(s.carrier), check_star, s, samples)
    build.add('star_associative/{}'.format(s.carrier), check_star_associative, s, samples)
  flipped = LeftShiftTridend(session.mode, session.engine, dot_sign=1)
  build.add('axioms/{}'.format(flipped.carrier), check_tridend_axioms, flipped, lsh_samples, expected=False)
  return build.checks

def omega_suite(session):
  build = SuiteBuilder('omega')
  build.add('morphism', check_omega_morphism, DegreeBoundedSamples(session.algebra, 4), session.engine)
  build.add('injective', check_omega_injective, DegreeBoundedSamples(session.algebra, 5))
  build.add('decompose', check_decompose_roundtrip, DegreeBoundedSamples(session.algebra, 5))
  return build.checks

def _with_pairing(algebra):
  """
  The algebra itself when it declares a non-trivial pairing, else one with a~b.
  """
  if any( algebra.pairing[x] != x for x in algebra.names ):
    return algebra
  names = algebra.names
  if len(names) < 2:
    return BaseAlgebra(algebra.mode, ['a~b', 'b'])
  decls = [ '{}~{}'.format(names[0], names[1]), names[1] ] + names[2:]
  return BaseAlgebra(algebra.mode, decls)

def involution_suite(session):
  build = SuiteBuilder('involution')
  noncomm = _with_pairing(_noncommutative(session))
  a = noncomm.monomial(noncomm.names[0])
  b = noncomm.monomial(noncomm.names[1])
  letters = [a, b, a * b, b * a]
  build.add('qone[noncomm]', check_involutive_qone, noncomm, session.samples(True, letters=letters).derive(algebra=noncomm), session.engine)
  comm = _with_pairing(_commutative(session))
  comm_letters = [comm.unit_monomial()] + [ comm.monomial(x) for x in comm.names[:2] ]
  build.add('plus_lsh[comm]', check_involutive_plus_lsh, comm, session.samples(True, letters=comm_letters).derive(algebra=comm), session.engine)
  samples = session.samples(True, max_len=2).derive(algebra=comm)
  for kind in _distinct_kinds(qsh(session.theta), RSH, LSH):
    build.add('free/{}'.format(kind.label), check_involutive_free, comm, kind, samples, session.engine)
  return build.checks

def lift_suite(session):
  build = SuiteBuilder('lift')
  algebra = session.algebra
  names = algebra.names
  substitution = { names[0]: TensorElement.from_word((algebra.monomial(names[-1]),), plus=True) }
  for kind in (qsh(session.theta), RSH, LSH):
    samples = session.samples(True, max_len=2)
    build.add('identity/{}'.format(kind.label), check_identity_lift, kind, samples, session.engine)
    build.add('inclusion/{}'.format(kind.label), check_lift, lift_morphism({}, kind, algebra, engine=session.engine), kind, samples, session.engine)
    if algebra.mode == COMMUTATIVE or len(names) == 1:
      lift = lift_morphism(substitution, kind, algebra, engine=session.engine)
      build.add('substitution/{}'.format(kind.label), check_lift, lift, kind, samples, session.engine)
  return build.checks

def spitzer_suite(session):
  build = SuiteBuilder('spitzer')
  algebra = _commutative(session)
  a = TensorElement.from_word((algebra.monomial(algebra.names[0]),), plus=True)
  order = min(session.order, session.order_cap)
  for theta in SPITZER_WEIGHTS:
    build.add('qsh({})'.format(theta), spitzer_verify, theta, a, order, session.order_cap, session.engine)
  return build.checks

BIALGEBRA_ALGEBRAS = (('h:primitive',), ('g:grouplike',), ('h:primitive', 'g:grouplike'))

def _bialgebra_algebras(session):
  algebras = [ BaseAlgebra(COMMUTATIVE, decls) for decls in BIALGEBRA_ALGEBRAS ]
  algebra = session.algebra
  if algebra.mode == COMMUTATIVE and all( gen.coproduct_rule for gen in algebra.generators ) and algebra not in algebras:
    algebras.append(algebra)
  return algebras

def bialg1_suite(session):
  build = SuiteBuilder('bialg1')
  for algebra in _bialgebra_algebras(session):
    letters = [ algebra.unit_monomial() ] + algebra.monomials_up_to(2)
    laws = session.samples(True, max_len=3, letters=letters).derive(algebra=algebra)
    morphism = laws.derive(max_len=2, triple_len=1)
    for kind in (RSH, LSH, qsh(session.theta)):
      label = '{}/H[{}]'.format(kind.label, algebra.spec())
      build.add('laws/{}'.format(label), check_case1_laws, kind, algebra, laws, session.engine)
      build.add('morphism/{}'.format(label), check_case1_morphism, kind, algebra, morphism, session.engine)
  source = BaseAlgebra(COMMUTATIVE, ['h:primitive', 'g:grouplike'])
  target = BaseAlgebra(COMMUTATIVE, ['p:primitive', 'q:grouplike'])
  collapsing = BaseAlgebra(COMMUTATIVE, ['h:primitive', 'k:primitive'])
  functors = (
    (source, target, {'h': 'p', 'g': 'q'}),
    (collapsing, BaseAlgebra(COMMUTATIVE, ['p:primitive']), {'h': 'p', 'k': 'p'})
  )
  for src, dst, mapping in functors:
    letters = [ src.unit_monomial() ] + src.monomials_up_to(2)
    samples = session.samples(True, max_len=3, letters=letters).derive(algebra=src)
    for kind in (RSH, LSH, qsh(session.theta)):
      build.add('functor/{}/{}->{}'.format(kind.label, src.spec(), dst.spec()), check_case1_functor, kind, src, dst, mapping, samples)
  return build.checks

def bialg2_suite(session):
  build = SuiteBuilder('bialg2')
  algebra = _commutative(session)
  square = SquareAmbient(algebra.mode, RSH, session.engine)
  fixed = FixedSamples(square_samples(algebra))
  build.identity('associative/amalg', IdentityKind(ASSOCIATIVE), None, square, fixed)
  build.identity('commutative/amalg', IdentityKind(COMMUTATIVE_LAW), None, square, fixed)
  build.identity('unital/amalg', IdentityKind(UNITAL), None, square, fixed)
  build.identity('nijenhuis/sandwich', IdentityKind(NIJENHUIS), Sandwich(), square, fixed)
  letters = [ algebra.unit_monomial() ] + algebra.monomials_up_to(2)
  laws = session.samples(True, max_len=3, letters=letters).derive(algebra=algebra)
  build.add('laws', check_case2_laws, laws)
  build.add('morphism', check_case2_morphism, laws.derive(max_len=2), session.engine)
  return build.checks

def _word(algebra, *texts):
  return TensorElement.from_word([ algebra.parse_monomial(t) for t in texts ], plus=True)

def primitives_suite(session):
  build = SuiteBuilder('primitives')
  single = BaseAlgebra(COMMUTATIVE, ['a'])
  build.add('case2/D=3', check_primitives, 2, RSH, 3, single, [ _word(single, x) for x in ('a', 'a^2', 'a^3') ])
  primitive = BaseAlgebra(COMMUTATIVE, ['h:primitive'])
  grouplike = BaseAlgebra(COMMUTATIVE, ['g:grouplike'])
  for bound in (2, 3):
    build.add('case1/rsh/h/D={}'.format(bound), check_primitives, 1, RSH, bound, primitive, [_word(primitive, 'h')])
  build.add('case1/rsh/g/D=2', check_primitives, 1, RSH, 2, grouplike, [])
  return build.checks

def differential_suite(session):
  build = SuiteBuilder('differential')
  for kind in _distinct_kinds(SH, qsh(1), qsh(session.theta), RSH, LSH):
    for mode in (COMMUTATIVE, NONCOMMUTATIVE):
      build.add('engines/{}[{}]'.format(kind.label, mode), differential.check_engines_agree, kind, mode)
  build.add('qsh(0)=sh', differential.check_weight_zero, session.samples(), session.engine)
  for kind in (RSH, LSH, qsh(session.theta)):
    build.identity('associative/{}'.format(kind.label), IdentityKind(ASSOCIATIVE), None, session.ambient(False, kind), session.samples())
  if session.mode == COMMUTATIVE:
    for kind in (RSH, LSH, qsh(session.theta)):
      build.identity('commutative/{}'.format(kind.label), IdentityKind(COMMUTATIVE_LAW), None, session.ambient(False, kind), session.samples())
  noncomm = _noncommutative(session)
  lsh = TensorAmbient(noncomm.mode, LSH, engine=session.engine)
  build.identity('commutative/lsh[noncomm]', IdentityKind(COMMUTATIVE_LAW), None, lsh, session.samples().derive(algebra=noncomm), expected=False)
  for kind in (RSH, LSH):
    build.add('unit_words/{}'.format(kind.label), differential.check_unit_words, kind, session.samples(), session.engine)
  build.add('worked_examples', differential.check_worked_examples, session.engine)
  build.add('word_counts', differential.check_word_counts, session.mode)
  return build.checks

SUITES = {
  'rb': rb_suite,
  'nijenhuis': nijenhuis_suite,
  'td': td_suite,
  'average': average_suite,
  'tridend': tridend_suite,
  'omega': omega_suite,
  'involution': involution_suite,
  'lift': lift_suite,
  'spitzer': spitzer_suite,
  'bialg1': bialg1_suite,
  'bialg2': bialg2_suite,
  'primitives': primitives_suite,
  'differential': differential_suite
}

def resolve_suites(names):
  """
  Expands 'all' and validates suite names, keeping the catalog order.
  """
  names = list(names or [SUITE_ALL])
  if SUITE_ALL in names:
    return list(SUITES)
  unknown = [ x for x in names if x not in SUITES ]
  if unknown:
    raise UsageError('Unknown suite(s): {} (expected one of {})'.format(', '.join(unknown), ', '.join([SUITE_ALL] + list(SUITES))))
  return [ x for x in SUITES if x in names ]

def build_checks(session, names=None):
  checks = []
  for name in resolve_suites(names):
    checks.extend(SUITES[name](session))
  return checks
