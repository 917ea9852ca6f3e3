# SPDX-License-Identifier: Apache-2.0

import time

from collections import Counter
from multiprocessing import Pool

import pyrota.core.constants as constants
from pyrota.core.config import Config
from pyrota.logger import FileLogger

def run_check(check):
  """
  Pool entry point: runs one check and returns (report, elapsed).
  """
  report = check.protected_run()
  return report, check.elapsed

class CheckEngine:
  """
  Runs every pending check of a CheckRegister, sequentially or over a
  process pool, and hands each report to the emit callback in registration
  order, so output is independent of scheduling.
  """
  
  def __init__(self, config=None, logger=None):
    self.config = config or Config()
    self.logger = logger or FileLogger(self.config['log_file'])
    self.register = None
    self.start_time = None
    self._suite = None
    self._suite_sizes = {}
  
  def initiate(self, register=None, emit=None):
    """
    Begins the execution loop.
    
    Args:
      register (CheckRegister): Checks to run; defaults to self.register.
      emit (callable): Receives (check, report) for every finished check.
    
    Returns:
      Number of checks whose outcome differs from the expected one.
    """
    if register is not None:
      self.register = register
    if self.register is None:
      raise RuntimeError('CheckRegister has not been initialized!')
    
    self.start_time = time.time()
    self.logger.open()
    checks = list(self.register.pending_checks)
    self._suite = None
    self._suite_sizes = Counter( c.suite for c in checks )
    max_procs = self.config['max_procs']
    self.logger._system_('Running {} checks with {} process(es)'.format(len(checks), max(1, max_procs)))
    
    try:
      if max_procs > 1 and len(checks) > 1:
        with Pool(processes=max_procs) as pool:
          for check, (report, elapsed) in zip(checks, pool.imap(run_check, checks)):
            self._finish(check, report, elapsed, emit)
      else:
        for check in checks:
          self._enter_suite(check)
          self.logger.info('Starting {}'.format(check.name))
          report, elapsed = run_check(check)
          self._finish(check, report, elapsed, emit)
    finally:
      self.logger._system_('Finished in {:0.2f} seconds'.format(time.time() - self.start_time))
      self.logger.close()
    
    return len(self.register.failed_checks)
  
  def _enter_suite(self, check):
    if check.suite != self._suite:
      self._suite = check.suite
      self.logger.suite_message(check.suite, self._suite_sizes[check.suite])
  
  def _finish(self, check, report, elapsed, emit):
    self._enter_suite(check)
    check.report = report
    check.elapsed = elapsed
    if report.ok:
      self.register.set_status(check, constants.STATUS_COMPLETED)
      self.logger.success('{} ({:0.2f} sec.)'.format(check.name, elapsed or 0))
      for note in report.notes:
        self.logger.warn(note)
    else:
      self.register.set_status(check, constants.STATUS_FAILED)
      self.logger.error('{} ({:0.2f} sec.)'.format(check.name, elapsed or 0))
      if report.counterexample:
        self.logger.error('Counterexample: {}'.format(report.counterexample))
      for note in report.notes:
        self.logger.error(note)
    if emit:
      emit(check, report)
