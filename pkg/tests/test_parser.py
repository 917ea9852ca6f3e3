# SPDX-License-Identifier: Apache-2.0

import pytest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from pyrota.core.errors import DslSyntaxError
from pyrota.dsl.parser import parse_expr, FUNCTIONS
from pyrota.dsl.ast import Number, Symbol, FunctionRef, EmptyWord, Word, Apply, Neg, Power, BinOp

@pytest.mark.parametrize('src, expected', [
  ('a', Symbol('a')),
  ('3/2', Number(Fraction(3, 2))),
  ('1_K', EmptyWord()),
  ('P', FunctionRef('P')),
  ('[a,b]', Word((Symbol('a'), Symbol('b')))),
  ('lsh([a];[b])', Apply('lsh', (Word((Symbol('a'),)), Word((Symbol('b'),))))),
  ('-a + b', BinOp('+', Neg(Symbol('a')), Symbol('b'))),
  ('a - b - c', BinOp('-', BinOp('-', Symbol('a'), Symbol('b')), Symbol('c'))),
  ('2*a^3', BinOp('*', Number(Fraction(2)), Power(Symbol('a'), 3))),
  ('(a + b)*c', BinOp('*', BinOp('+', Symbol('a'), Symbol('b')), Symbol('c')))
])
def test_parse(src, expected):
  assert parse_expr(src) == expected

def test_whitespace_is_ignored():
  assert parse_expr(' qsh( [a , b] ; [1] ; 1/3 ) ') == parse_expr('qsh([a,b];[1];1/3)')

def test_function_prefix_is_a_symbol():
  """Names that merely start with a function name are generators."""
  assert parse_expr('Px') == Symbol('Px')
  assert parse_expr('delta_1') == Symbol('delta_1')

@pytest.mark.parametrize('src', [
  'qsh([a];[b]',
  '[a,,b]',
  'a +',
  '[]',
  'a $ b'
])
def test_syntax_errors(src):
  with pytest.raises(DslSyntaxError) as e:
    parse_expr(src)
  assert e.value.line == 1
  assert e.value.column >= 1
  assert 'E_SYNTAX' in str(e.value)

def test_syntax_error_position():
  with pytest.raises(DslSyntaxError) as e:
    parse_expr('a +\n  b ]')
  assert e.value.line == 2

@pytest.mark.parametrize('src', [
  'P([a,b]) - [1,a,b]',
  'prec1(dot1([a];[b]);[a])',
  '(-a)^2*b',
  '-(a - b)',
  'a - (b - c)',
  '2 + [a]*1/2'
])
def test_to_source_round_trip(src):
  tree = parse_expr(src)
  assert parse_expr(tree.to_source()) == tree

symbols = st.sampled_from(['a', 'b', 'x1', 'g_2']).map(Symbol)
numbers = st.fractions(min_value=0, max_value=10, max_denominator=7).map(Number)
leaves = st.one_of(symbols, numbers, st.just(EmptyWord()), st.sampled_from(FUNCTIONS).map(FunctionRef))

def _extend(children):
  return st.one_of(
    st.lists(children, min_size=1, max_size=3).map(lambda xs: Word(tuple(xs))),
    st.builds(lambda f, xs: Apply(f, tuple(xs)), st.sampled_from(FUNCTIONS), st.lists(children, min_size=1, max_size=3)),
    children.map(Neg),
    st.builds(Power, children, st.integers(min_value=0, max_value=4)),
    st.builds(BinOp, st.sampled_from(['+', '-', '*']), children, children)
  )

expressions = st.recursive(leaves, _extend, max_leaves=12)

@settings(max_examples=500, deadline=None)
@given(expressions)
def test_render_parse_round_trip(tree):
  assert parse_expr(tree.to_source()) == tree
