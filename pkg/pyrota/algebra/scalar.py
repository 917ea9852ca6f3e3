# SPDX-License-Identifier: Apache-2.0

from fractions import Fraction
from numbers import Rational

ZERO = Fraction(0)
ONE = Fraction(1)

def to_scalar(value):
  """
  Coerces ints, Fractions and 'p/q' strings to an exact Fraction.
  
  Floats are refused: every coefficient in the kernel is an exact rational.
  """
  if isinstance(value, bool):
    raise TypeError('Booleans are not scalars')
  if isinstance(value, (Rational, str)):
    return Fraction(value)
  raise TypeError('Expected an exact rational, got {}'.format(type(value).__name__))

def is_scalar(value):
  return isinstance(value, Rational) and not isinstance(value, bool)

def format_scalar(value):
  return str(Fraction(value))

def render_terms(items, unit_body=None):
  """
  Renders (coefficient, body) pairs as a signed sum, e.g. "3/2*(a|b) - (1)".
  
  Args:
    items (iterable): (Fraction, str) pairs in output order.
    unit_body (str): Body that prints as the bare coefficient, like '1' for base elements.
  """
  parts = []
  for coeff, body in items:
    sign = '-' if coeff < 0 else '+'
    magnitude = abs(coeff)
    if body == unit_body:
      text = format_scalar(magnitude)
    elif magnitude == 1:
      text = body
    else:
      text = '{}*{}'.format(format_scalar(magnitude), body)
    if not parts:
      parts.append(text if sign == '+' else '-{}'.format(text))
    else:
      parts.append(' {} {}'.format(sign, text))
  return ''.join(parts) if parts else '0'
