# SPDX-License-Identifier: Apache-2.0

import time
import traceback

from abc import ABC, abstractmethod

from pyrota.operators.report import CheckReport

class Check(ABC):
  """
  Abstract class from which every registered check is derived.
  
  Only run() is mandatory; it returns a CheckReport. Checks are shipped to
  worker processes when the engine runs in parallel, so subclasses must be
  picklable.
  
  Attributes:
    name (str): Unique, human readable name, e.g. "rb/rota_baxter(1)/P_A/qsh(1)".
    suite (str): Name of the suite the check belongs to.
    expected (bool): False for negative controls, which pass by failing.
  """
  
  def __init__(self, name, suite=None, expected=True):
    self.id = None
    self.name = name
    self.suite = suite
    self.expected = expected
    self.elapsed = None
    self.report = None
  
  @abstractmethod
  def run(self):
    """
    Mandatory: evaluate the check and return a CheckReport.
    """
    pass
  
  def protected_run(self):
    """
    Runs the check, turning an uncaught exception into a failing report that
    carries the error text.
    """
    start = time.time()
    try:
      report = self.run()
    except Exception as e:
      report = CheckReport(self.name, '-', '-')
      report.passed = False
      report.errored = True
      report.note('Uncaught exception: {}'.format(e))
      report.note(traceback.format_exc().strip().splitlines()[-1])
    report.expected = self.expected
    self.elapsed = time.time() - start
    return report
  
  def __repr__(self):
    return '{}({})'.format(type(self).__name__, self.name)

class FunctionCheck(Check):
  """
  A check backed by a module-level function returning a CheckReport.
  
  Args:
    name (str): Check name.
    func (callable): Module-level function, so that the check pickles.
    args (tuple): Positional arguments for func.
    kwargs (dict): Keyword arguments for func.
  """
  
  def __init__(self, name, func, args=(), kwargs=None, suite=None, expected=True):
    super().__init__(name, suite, expected)
    self.func = func
    self.args = tuple(args)
    self.kwargs = dict(kwargs or {})
  
  def run(self):
    return self.func(*self.args, **self.kwargs)
