# SPDX-License-Identifier: Apache-2.0

import re

from dataclasses import dataclass
from typing import Optional

from pyrota.core.errors import UsageError

PRIMITIVE = 'primitive'
GROUPLIKE = 'grouplike'
COPRODUCT_RULES = (PRIMITIVE, GROUPLIKE)

NAME_PATTERN = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')

@dataclass(frozen=True)
class Generator:
  """
  A named generator of the base algebra.
  
  Attributes:
    name (str): ASCII identifier.
    coproduct_rule (str): 'primitive', 'grouplike' or None.
    involution_image (str): Name of the paired generator; defaults to the generator itself.
  """
  name: str
  coproduct_rule: Optional[str] = None
  involution_image: Optional[str] = None
  
  def __post_init__(self):
    if not NAME_PATTERN.match(self.name or ''):
      raise UsageError('Generator name "{}" is not an ASCII identifier'.format(self.name))
    if self.coproduct_rule not in (None,) + COPRODUCT_RULES:
      raise UsageError('Unknown coproduct rule "{}" for generator {}'.format(self.coproduct_rule, self.name))
    if self.involution_image is None:
      object.__setattr__(self, 'involution_image', self.name)
  
  @classmethod
  def parse(cls, text):
    """
    Parses a declaration of the form name[:rule][~partner].
    """
    text = text.strip()
    partner = None
    rule = None
    if '~' in text:
      text, partner = [ x.strip() for x in text.split('~', 1) ]
    if ':' in text:
      text, rule = [ x.strip() for x in text.split(':', 1) ]
      rule = rule.lower() or None
      if rule == 'none':
        rule = None
    return cls(text, rule, partner or None)
