# SPDX-License-Identifier: Apache-2.0

from fractions import Fraction

import pyparsing as pp

from pyrota.core.errors import DslSyntaxError
from pyrota.dsl.ast import Number, Symbol, FunctionRef, EmptyWord, Word, Apply, Neg, Power, BinOp

FUNCTIONS = (
  'P', 'Q', 'Pu',
  'sh', 'qsh', 'rsh', 'lsh', 'bsh',
  'prec', 'succ', 'dot', 'star',
  'prec1', 'succ1', 'dot1', 'star1',
  'dagger', 'delta', 'eps', 'omega', 'bstar', 'tilde', 'amalg'
)

pp.ParserElement.enable_packrat()

def _fold_product(tokens):
  result = tokens[0]
  for operand in tokens[1:]:
    result = BinOp('*', result, operand)
  return result

def _fold_sum(tokens):
  tokens = list(tokens)
  if tokens[0] == '-':
    result = Neg(tokens[1])
    rest = tokens[2:]
  else:
    result = tokens[0]
    rest = tokens[1:]
  for op, operand in zip(rest[0::2], rest[1::2]):
    result = BinOp(op, result, operand)
  return result

def _power(tokens):
  if len(tokens) == 1:
    return tokens[0]
  return Power(tokens[0], int(tokens[1]))

def build_grammar():
  """
  EXPR   := ['-'] TERM (('+'|'-') TERM)*
  TERM   := POWER ('*' POWER)*
  POWER  := FACTOR ['^' INT]
  FACTOR := FN '(' EXPR (';' EXPR)* ')' | FN | '1_K' | RATIONAL | SYMBOL
          | '[' EXPR (',' EXPR)* ']' | '(' EXPR ')'
  """
  expr = pp.Forward()
  function_name = pp.MatchFirst([ pp.Keyword(name) for name in sorted(FUNCTIONS, key=len, reverse=True) ])
  
  number = pp.Regex(r'\d+(?:/\d+)?').set_name('rational')
  number.set_parse_action(lambda t: Number(Fraction(t[0])))
  
  symbol = (~function_name + pp.Regex(r'[A-Za-z_][A-Za-z0-9_]*')).set_name('symbol')
  symbol.set_parse_action(lambda t: Symbol(t[0]))
  
  empty = pp.Keyword('1_K')
  empty.set_parse_action(lambda t: EmptyWord())
  
  arguments = pp.Group(expr + pp.ZeroOrMore(pp.Suppress(';') + expr))
  call = function_name + pp.Suppress('(') + arguments + pp.Suppress(')')
  call.set_parse_action(lambda t: Apply(t[0], tuple(t[1])))
  
  reference = function_name.copy().set_parse_action(lambda t: FunctionRef(t[0]))
  
  word = pp.Suppress('[') + pp.Group(expr + pp.ZeroOrMore(pp.Suppress(',') + expr)) + pp.Suppress(']')
  word.set_parse_action(lambda t: Word(tuple(t[0])))
  
  parens = pp.Suppress('(') + expr + pp.Suppress(')')
  
  factor = call | reference | empty | number | symbol | word | parens
  power = factor + pp.Optional(pp.Suppress('^') + pp.Regex(r'\d+'))
  power.set_parse_action(_power)
  term = power + pp.ZeroOrMore(pp.Suppress('*') + power)
  term.set_parse_action(_fold_product)
  expr <<= pp.Optional('-') + term + pp.ZeroOrMore(pp.one_of('+ -') + term)
  expr.set_parse_action(_fold_sum)
  return expr

GRAMMAR = build_grammar()

def parse_expr(src):
  """
  Parses DSL text into an expression tree.
  
  Raises:
    DslSyntaxError: with the 1-based line and column of the failure.
  """
  try:
    return GRAMMAR.parse_string(src, parse_all=True)[0]
  except pp.ParseBaseException as e:
    raise DslSyntaxError('Cannot parse "{}"'.format(src), e.lineno, e.col, e.msg)
