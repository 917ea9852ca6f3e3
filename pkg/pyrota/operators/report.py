# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass, field
from typing import List, Optional

def render_value(value):
  return value.render() if hasattr(value, 'render') else str(value)

@dataclass
class CheckReport:
  """
  Outcome of checking one law on a set of samples.
  
  A failing report carries the first sample on which the two sides differ.
  expected is False for negative controls, which succeed by failing. An
  errored report never counts as ok, whatever was expected.
  """
  identity: str
  operator: str
  ambient: str
  passed: bool = True
  samples: int = 0
  counterexample: Optional[dict] = None
  notes: List[str] = field(default_factory=list)
  expected: bool = True
  errored: bool = False
  
  @property
  def ok(self):
    return not self.errored and self.passed == self.expected
  
  def record_failure(self, inputs, lhs, rhs, law=None):
    self.passed = False
    self.counterexample = {
      'inputs': [ render_value(x) for x in inputs ],
      'lhs': render_value(lhs),
      'rhs': render_value(rhs)
    }
    if law:
      self.counterexample['law'] = law
  
  def note(self, text):
    if text not in self.notes:
      self.notes.append(text)
  
  def to_dict(self):
    data = {
      'identity': self.identity,
      'operator': self.operator,
      'ambient': self.ambient,
      'pass': self.passed,
      'samples': self.samples,
      'counterexample': self.counterexample
    }
    if not self.expected:
      data['expected'] = False
    if self.errored:
      data['error'] = True
    if self.notes:
      data['notes'] = list(self.notes)
    return data
  
  @classmethod
  def from_dict(cls, data):
    return cls(
      identity=data['identity'],
      operator=data['operator'],
      ambient=data['ambient'],
      passed=data['pass'],
      samples=data['samples'],
      counterexample=data.get('counterexample'),
      notes=list(data.get('notes', [])),
      expected=data.get('expected', True),
      errored=data.get('error', False)
    )

def run_equations(report, tuples, equations):
  """
  Evaluates equations(*sample) -> [(law, lhs, rhs), ...] on every sample,
  stopping at the first inequality.
  """
  for args in tuples:
    for law, lhs, rhs in equations(*args):
      if lhs != rhs:
        report.record_failure(args, lhs, rhs, law)
        return report
    report.samples += 1
  return report
