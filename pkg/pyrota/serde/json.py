# SPDX-License-Identifier: Apache-2.0

import json

from pyrota.core.errors import UsageError
from pyrota.algebra.scalar import is_scalar, format_scalar, to_scalar
from pyrota.algebra.base import BaseElement
from pyrota.algebra.tensor import TensorElement
from pyrota.algebra.legs import TwoLegElement
from pyrota.operators.report import CheckReport
from pyrota.serde.abstract import SerDe

SEPARATORS = (',', ':')

def _word(word):
  return [ m.render() for m in word ]

class JsonSerDe(SerDe):
  """
  One compact JSON object per value:
  
    tensor element   {"terms":[{"coeff":"3/2","word":["a","b*c"]}]}
    two-leg element  {"terms":[{"coeff":"1","left":["1","1"],"right":["a*b"]}]}
    base element     {"base":[{"coeff":"2","monomial":"a^2"}]}
    scalar           {"scalar":"1/3"}
    decomposition    {"tree":"prec1([a];[b])"}
    check report     {"identity":...,"operator":...,"ambient":...,"pass":...,"samples":...,"counterexample":...}
  
  An element with no terms is written {"terms":[]} and read back as the zero tensor element.
  """
  
  def to_object(self, value):
    if is_scalar(value):
      return { 'scalar': format_scalar(value) }
    if isinstance(value, CheckReport):
      return value.to_dict()
    if hasattr(value, 'to_source'):
      return { 'tree': value.to_source() }
    if isinstance(value, BaseElement):
      return { 'base': [ { 'coeff': format_scalar(c), 'monomial': m.render() } for m, c in value.items() ] }
    if isinstance(value, TwoLegElement):
      return { 'terms': [
        { 'coeff': format_scalar(c), 'left': _word(left), 'right': _word(right) } for (left, right), c in value.items()
      ] }
    if isinstance(value, TensorElement):
      return { 'terms': [ { 'coeff': format_scalar(c), 'word': _word(w) } for w, c in value.items() ] }
    raise TypeError('Cannot serialize {}'.format(type(value).__name__))
  
  def serialize(self, value):
    return json.dumps(self.to_object(value), separators=SEPARATORS, ensure_ascii=False)
  
  def from_object(self, obj, algebra):
    mode = algebra.mode
    def word(letters):
      return tuple( algebra.parse_monomial(x) for x in letters )
    if 'identity' in obj:
      return CheckReport.from_dict(obj)
    if 'scalar' in obj:
      return to_scalar(obj['scalar'])
    if 'base' in obj:
      terms = {}
      for term in obj['base']:
        mono = algebra.parse_monomial(term['monomial'])
        terms[mono] = terms.get(mono, 0) + to_scalar(term['coeff'])
      return BaseElement(mode, terms)
    if 'terms' not in obj:
      raise UsageError('Unrecognised JSON value: {}'.format(sorted(obj)))
    terms = obj['terms']
    if terms and 'left' in terms[0]:
      legs = {}
      for term in terms:
        key = (word(term['left']), word(term['right']))
        legs[key] = legs.get(key, 0) + to_scalar(term['coeff'])
      return TwoLegElement(mode, legs)
    words = {}
    for term in terms:
      key = word(term['word'])
      words[key] = words.get(key, 0) + to_scalar(term['coeff'])
    return TensorElement(mode, words, plus=bool(words) and () not in words)
  
  def deserialize(self, text, algebra):
    return self.from_object(json.loads(text), algebra)
