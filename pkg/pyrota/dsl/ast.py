# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from pyrota.algebra.scalar import format_scalar

ADDITIVE = ('+', '-')

class Expr:
  """
  Base of the expression tree. to_source renders text the parser reads back
  into an equal tree.
  """
  
  def to_source(self):
    raise NotImplementedError

@dataclass(frozen=True)
class Number(Expr):
  value: Fraction
  
  def to_source(self):
    return format_scalar(self.value)

@dataclass(frozen=True)
class Symbol(Expr):
  name: str
  
  def to_source(self):
    return self.name

@dataclass(frozen=True)
class FunctionRef(Expr):
  """
  A function name used where a value is expected.
  """
  name: str
  
  def to_source(self):
    return self.name

@dataclass(frozen=True)
class EmptyWord(Expr):
  
  def to_source(self):
    return '1_K'

@dataclass(frozen=True)
class Word(Expr):
  letters: Tuple[Expr, ...]
  
  def to_source(self):
    return '[{}]'.format(','.join( x.to_source() for x in self.letters ))

@dataclass(frozen=True)
class Apply(Expr):
  function: str
  args: Tuple[Expr, ...]
  
  def to_source(self):
    return '{}({})'.format(self.function, ';'.join( x.to_source() for x in self.args ))

@dataclass(frozen=True)
class Neg(Expr):
  operand: Expr
  
  def to_source(self):
    return '(-{})'.format(_wrap(self.operand, ADDITIVE))

@dataclass(frozen=True)
class Power(Expr):
  base: Expr
  exponent: int
  
  def to_source(self):
    return '{}^{}'.format(_wrap(self.base, ADDITIVE + ('*', '^')), self.exponent)

@dataclass(frozen=True)
class BinOp(Expr):
  op: str
  left: Expr
  right: Expr
  
  def to_source(self):
    if self.op in ADDITIVE:
      left = self.left.to_source()
      right = _wrap(self.right, ADDITIVE)
      return '{} {} {}'.format(left, self.op, right)
    left = _wrap(self.left, ADDITIVE)
    right = _wrap(self.right, ADDITIVE + ('*',))
    return '{}*{}'.format(left, right)

def _wrap(node, ops):
  text = node.to_source()
  if isinstance(node, BinOp) and node.op in ops:
    return '({})'.format(text)
  if isinstance(node, Power) and '^' in ops:
    return '({})'.format(text)
  return text
