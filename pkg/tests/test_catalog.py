# SPDX-License-Identifier: Apache-2.0

import pickle
import pytest

from pyrota.core.errors import UsageError
from pyrota.core.session import Session
from pyrota.algebra.base import BaseAlgebra
from pyrota.shuffle.kind import ProductKind, qsh
from pyrota.check.catalog import SUITES, resolve_suites, build_checks

@pytest.fixture
def session(comm):
  return Session(comm, qsh(1), max_len=2, random_len=3, random_samples=5)

def test_resolve_suites():
  assert resolve_suites(None) == list(SUITES)
  assert resolve_suites(['td', 'all']) == list(SUITES)
  assert resolve_suites(['td', 'rb']) == ['rb', 'td']
  with pytest.raises(UsageError):
    resolve_suites(['rb', 'jacobi'])

@pytest.mark.parametrize('mode', ['comm', 'noncomm'])
def test_check_names_are_unique(mode):
  session = Session(BaseAlgebra.from_spec(mode, 'a,b'), qsh(1))
  checks = build_checks(session)
  names = [ c.name for c in checks ]
  assert len(names) == len(set(names))
  assert all( c.name.startswith(c.suite + '/') for c in checks )

def test_suites_are_nonempty(session):
  for name in SUITES:
    assert build_checks(session, [name]), name

def test_negative_controls(session):
  expected_failures = { c.name for c in build_checks(session) if not c.expected }
  assert expected_failures == {
    'rb/rota_baxter(1)/P_A/rsh',
    'nijenhuis/nij_conjugate_literal/rsh',
    'tridend/axioms/plus_lsh[dot+1]',
    'differential/commutative/lsh[noncomm]'
  }

def test_configured_product(comm):
  session = Session(comm, ProductKind.parse('rsh'), explicit_product=True)
  names = [ c.name for c in build_checks(session, ['rb']) ]
  assert names == ['rb/rota_baxter(1)/P_A/rsh', 'rb/rota_baxter(1)/P_A/rsh+']

def test_checks_pickle(session):
  for check in build_checks(session, ['rb', 'tridend', 'bialg2']):
    assert pickle.loads(pickle.dumps(check)).name == check.name

@pytest.mark.parametrize('suite', ['average', 'td', 'primitives', 'omega'])
def test_small_suites_pass(suite, session):
  for check in build_checks(session, [suite]):
    report = check.protected_run()
    assert report.ok, (check.name, report.counterexample, report.notes)
