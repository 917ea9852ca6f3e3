# SPDX-License-Identifier: Apache-2.0

import pytest
from fractions import Fraction

from pyrota.core.config import Config
from pyrota.core.engine import CheckEngine
from pyrota.core.register import CheckRegister
from pyrota.algebra.base import BaseAlgebra
from pyrota.check.abstract import FunctionCheck
from pyrota.operators.spitzer import spitzer_verify
from pyrota.operators.report import CheckReport
from pyrota.logger import FileLogger

from tests.util import word

def crash():
  raise RuntimeError('boom')

def failing():
  report = CheckReport('failing', '-', 'test')
  report.passed = False
  return report

@pytest.fixture
def engine(tmp_path):
  config = Config()
  config['log_file'] = str(tmp_path / 'run.log')
  config['max_procs'] = 1
  return CheckEngine(config)

def spitzer_checks():
  algebra = BaseAlgebra.from_spec('comm', 'a')
  a = word(algebra, 'a', plus=True)
  return [
    FunctionCheck('spitzer/qsh({})'.format(theta), spitzer_verify, (theta, a, 3), suite='spitzer')
    for theta in (Fraction(0), Fraction(1), Fraction(-2))
  ]

def test_engine_success(engine):
  emitted = []
  register = CheckRegister().add_checks(spitzer_checks())
  res = engine.initiate(register, lambda check, report: emitted.append(check.name))
  assert res == 0
  assert len(register.completed_checks) == 3
  assert emitted == [ c.name for c in register.all_checks ]

def test_engine_failure(engine):
  register = CheckRegister().add_checks(spitzer_checks())
  register.add_check(FunctionCheck('other/fail', failing, suite='other'))
  register.add_check(FunctionCheck('other/expected_fail', failing, suite='other', expected=False))
  res = engine.initiate(register)
  assert res == 1
  assert [ c.name for c in register.failed_checks ] == ['other/fail']

def test_engine_parallel_keeps_order(engine):
  engine.config['max_procs'] = 2
  emitted = []
  register = CheckRegister().add_checks(spitzer_checks())
  res = engine.initiate(register, lambda check, report: emitted.append((check.name, report.ok)))
  assert res == 0
  assert emitted == [ (c.name, True) for c in register.all_checks ]

def test_engine_needs_register():
  with pytest.raises(RuntimeError):
    CheckEngine().initiate()

def test_engine_log(engine):
  register = CheckRegister().add_checks(spitzer_checks())
  engine.initiate(register)
  with open(engine.config['log_file']) as f:
    log = f.read()
  assert 'SUITE spitzer - 3 checks' in log
  assert 'SUCCESS' in log and 'LOG END' in log

def test_file_logger_devnull(capsys):
  logger = FileLogger()
  logger.open()
  logger.info('hello')
  logger.close()
  assert logger.logfile_handle is None
  assert capsys.readouterr().out == ''

def noted():
  report = CheckReport('noted', '-', 'test', samples=1)
  report.note('theta commutes with every letter')
  return report

def test_engine_logs_notes_of_passing_checks(engine):
  register = CheckRegister().add_checks([FunctionCheck('noted', noted, suite='noted')])
  assert engine.initiate(register) == 0
  with open(engine.config['log_file']) as f:
    log = f.read()
  assert 'WARN' in log and 'theta commutes with every letter' in log

def test_engine_counts_crashed_negative_control(engine):
  register = CheckRegister().add_checks([FunctionCheck('crash', crash, suite='crash', expected=False)])
  assert engine.initiate(register) == 1
  assert register.find_check(name='crash') in register.failed_checks
