# SPDX-License-Identifier: Apache-2.0

from pyrota.core.errors import UsageError
from pyrota.algebra.base import BaseAlgebra
from pyrota.shuffle import ENGINES
from pyrota.shuffle.kind import ProductKind, qsh
from pyrota.operators.ambient import TensorAmbient
from pyrota.operators.samples import SamplePolicy
from pyrota.dsl.parser import FUNCTIONS

FORMATS = ('text', 'json')
CASES = (1, 2)

class Session:
  """
  Resolved settings shared by every subcommand: the base algebra, the product
  kind, the bialgebra case, the engine and the sampling bounds.
  
  Built from a Config, so the same flags and ROTA_* variables drive eval,
  check, spitzer, primitives and decompose alike.
  """
  
  def __init__(self, algebra, kind, case=2, engine='recursive', max_len=3, random_len=4,
               random_samples=200, order=4, order_cap=6, seed=42, output_format='text', explicit_product=False):
    for name in algebra.names:
      if name in FUNCTIONS:
        raise UsageError('Generator name {} collides with a function of the expression language'.format(name))
    if case not in CASES:
      raise UsageError('Unknown bialgebra case {} (expected 1 or 2)'.format(case))
    if engine not in ENGINES:
      raise UsageError('Unknown engine "{}" (expected one of {})'.format(engine, ', '.join(sorted(ENGINES))))
    if output_format not in FORMATS:
      raise UsageError('Unknown output format "{}" (expected one of {})'.format(output_format, ', '.join(FORMATS)))
    for label, value in (('max-len', max_len), ('random-len', random_len), ('order', order), ('order-cap', order_cap)):
      if value < 1:
        raise UsageError('Bound {} must be positive, got {}'.format(label, value))
    if random_samples < 0:
      raise UsageError('Number of random samples cannot be negative')
    self.algebra = algebra
    self.kind = kind
    self.case = case
    self.engine = engine
    self.max_len = max_len
    self.random_len = random_len
    self.random_samples = random_samples
    self.order = order
    self.order_cap = order_cap
    self.seed = seed
    self.output_format = output_format
    self.explicit_product = explicit_product
  
  @classmethod
  def from_config(cls, config):
    algebra = BaseAlgebra.from_spec(config['base'], config['gens'])
    tag = config['product']
    kind = ProductKind.parse(tag, config['theta']) if tag else qsh(config['theta'])
    return cls(
      algebra, kind,
      case=config['case'],
      engine=config['engine'],
      max_len=config['max_len'],
      random_len=config['random_len'],
      random_samples=config['random_samples'],
      order=config['order'],
      order_cap=config['order_cap'],
      seed=config['seed'],
      output_format=config['format'],
      explicit_product=bool(tag)
    )
  
  @property
  def mode(self):
    return self.algebra.mode
  
  @property
  def theta(self):
    return self.kind.theta
  
  def ambient(self, plus=False, kind=None):
    return TensorAmbient(self.mode, kind or self.kind, plus=plus, engine=self.engine)
  
  def samples(self, plus=False, **changes):
    policy = SamplePolicy(
      self.algebra, plus=plus,
      max_len=self.max_len,
      random_len=self.random_len,
      random_samples=self.random_samples,
      seed=self.seed
    )
    return policy.derive(**changes) if changes else policy
  
  def __repr__(self):
    return 'Session({}, {}, {}, case={})'.format(self.mode, self.algebra.spec(), self.kind.label, self.case)
