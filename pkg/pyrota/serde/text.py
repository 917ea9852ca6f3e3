# SPDX-License-Identifier: Apache-2.0

from fractions import Fraction

import pyparsing as pp

from pyrota.core.errors import DslSyntaxError, UsageError
from pyrota.algebra.scalar import ONE, is_scalar, format_scalar
from pyrota.algebra.base import BaseElement
from pyrota.algebra.tensor import TensorElement, EMPTY_WORD_TEXT
from pyrota.algebra.legs import TwoLegElement, LEG_SEPARATOR
from pyrota.operators.report import CheckReport
from pyrota.serde.abstract import SerDe

def _signed_sum(body):
  """
  ['-'] TERM (('+'|'-') TERM)*, TERM := RATIONAL '*' body | body | RATIONAL.
  Each term comes back as a (coefficient, body-or-None) pair.
  """
  rational = pp.Regex(r'\d+(?:/\d+)?').set_parse_action(lambda t: Fraction(t[0]))
  scaled = rational + pp.Suppress('*') + body
  scaled.set_parse_action(lambda t: (t[0], t[1]))
  bare = pp.Group(body).set_parse_action(lambda t: (ONE, t[0][0]))
  constant = rational.copy().set_parse_action(lambda t: (Fraction(t[0]), None))
  term = pp.Group(scaled | bare | constant)
  sign = pp.Optional(pp.one_of('+ -'), default='+')
  return pp.Group(sign + term) + pp.ZeroOrMore(pp.Group(pp.one_of('+ -') + term))

def _collect(tokens):
  for sign, (coeff, body) in ((t[0], t[1][0]) for t in tokens):
    yield (-coeff if sign == '-' else coeff), body

class TextSerDe(SerDe):
  """
  Canonical text form.
  
    tensor element   3/2*(a|b*c) - (1) + 1_K
    two-leg element  (1|1)⊗(a*b) + (a)⊗(1)
    base element     2*a^2 - 1
    scalar           1/3
  
  deserialize reads these forms back; "0" reads as the scalar 0.
  """
  
  def __init__(self):
    name = pp.Regex(r'[A-Za-z_][A-Za-z0-9_]*')
    factor = pp.Combine(name + pp.Optional('^' + pp.Regex(r'\d+')))
    monomial = pp.Combine(factor + pp.ZeroOrMore('*' + factor)) | pp.Literal('1')
    self._monomial = monomial
    word = (pp.Suppress('(') + pp.Group(monomial + pp.ZeroOrMore(pp.Suppress('|') + monomial)) + pp.Suppress(')')) \
      | pp.Literal(EMPTY_WORD_TEXT).set_parse_action(lambda t: [[]])
    word.set_parse_action(lambda t: [ tuple(t[0]) ])
    legs = pp.Group(word + pp.ZeroOrMore(pp.Suppress(LEG_SEPARATOR) + word))
    legs.set_parse_action(lambda t: [ tuple(t[0]) ])
    self._tensor_grammar = _signed_sum(legs)
    # '1' alone is a coefficient, so base bodies exclude the unit monomial
    self._base_grammar = _signed_sum(pp.Combine(factor + pp.ZeroOrMore('*' + factor)))
  
  def serialize(self, value):
    if is_scalar(value):
      return format_scalar(value)
    if isinstance(value, CheckReport):
      return self.report_line(value)
    if hasattr(value, 'to_source'):
      return value.to_source()
    if hasattr(value, 'render'):
      return value.render()
    raise TypeError('Cannot serialize {}'.format(type(value).__name__))
  
  def report_line(self, report):
    status = 'PASS' if report.passed else 'FAIL'
    if report.errored:
      status = 'ERROR'
    elif not report.expected:
      status = '{} (expected FAIL)'.format(status)
    lines = ['{:<22} {} on {}: {} [{} samples]'.format(status, report.identity, report.ambient, report.operator, report.samples)]
    if report.counterexample:
      cx = report.counterexample
      if 'law' in cx:
        lines.append('    law:    {}'.format(cx['law']))
      lines.append('    inputs: {}'.format(', '.join(cx['inputs'])))
      lines.append('    lhs:    {}'.format(cx['lhs']))
      lines.append('    rhs:    {}'.format(cx['rhs']))
    for note in report.notes:
      lines.append('    note:   {}'.format(note))
    return '\n'.join(lines)
  
  def _parse(self, grammar, text):
    try:
      return grammar.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
      raise DslSyntaxError('Cannot read "{}"'.format(text), e.lineno, e.col, e.msg)
  
  def deserialize(self, text, algebra):
    text = text.strip()
    mode = algebra.mode
    if '(' not in text and EMPTY_WORD_TEXT not in text:
      terms = {}
      scalar_only = True
      for coeff, body in _collect(self._parse(self._base_grammar, text)):
        mono = algebra.unit_monomial() if body is None else algebra.parse_monomial(body)
        scalar_only = scalar_only and body is None
        terms[mono] = terms.get(mono, 0) + coeff
      if scalar_only:
        return sum(terms.values(), Fraction(0))
      return BaseElement(mode, terms)
    arities = set()
    terms = {}
    for coeff, body in _collect(self._parse(self._tensor_grammar, text)):
      if body is None:
        raise UsageError('Bare coefficient {} in tensor text; write {}*1_K'.format(format_scalar(coeff), format_scalar(coeff)))
      key = tuple( tuple( algebra.parse_monomial(m) for m in w ) for w in body )
      arities.add(len(key))
      terms[key] = terms.get(key, 0) + coeff
    if arities == {1}:
      words = { key[0]: c for key, c in terms.items() }
      return TensorElement(mode, words, plus=() not in words)
    if arities == {2}:
      return TwoLegElement(mode, terms)
    raise UsageError('Mixed or unsupported leg counts {} in "{}"'.format(sorted(arities), text))
