# SPDX-License-Identifier: Apache-2.0

import json
import pytest
from fractions import Fraction

from pyrota.core.errors import DslSyntaxError, UsageError
from pyrota.algebra.base import BaseElement
from pyrota.algebra.tensor import TensorElement
from pyrota.algebra.legs import TwoLegElement
from pyrota.operators.report import CheckReport
from pyrota.dendriform.omega import omega_decompose
from pyrota.serde import serde_for, JsonSerDe, TextSerDe

from tests.util import word, tensor

def values(algebra):
  return [
    tensor(algebra, (Fraction(3, 2), ['a', 'a*b']), (-1, ['1']), (2, [])),
    TwoLegElement.from_pair(word(algebra, '1', '1'), word(algebra, 'a*b')) \
      + TwoLegElement.from_pair(word(algebra, 'a'), word(algebra, '1')).scale(Fraction(-1, 3)),
    algebra.element('a') * 2 - algebra.element('b') ** 2 + 1,
    Fraction(-7, 4)
  ]

@pytest.mark.parametrize('fmt', ['text', 'json'])
def test_round_trip(fmt, comm):
  serde = serde_for(fmt)
  for value in values(comm):
    assert serde.deserialize(serde.serialize(value), comm) == value

def test_round_trip_noncomm(noncomm):
  x = word(noncomm, 'b*a', 'a') - word(noncomm, 'a*b', 'a')
  for fmt in ('text', 'json'):
    serde = serde_for(fmt)
    assert serde.deserialize(serde.serialize(x), noncomm) == x

def test_text_forms(comm):
  serde = TextSerDe()
  assert serde.serialize(word(comm, 'a', 'b', coeff=Fraction(1, 2))) == '1/2*(a|b)'
  assert serde.serialize(TensorElement.zero('comm')) == '0'
  assert serde.serialize(Fraction(1, 3)) == '1/3'
  assert serde.serialize(omega_decompose(word(comm, 'a*b', 'a'))) == 'prec1(dot1([a];[b]);[a])'

def test_text_zero_reads_as_scalar(comm):
  assert TextSerDe().deserialize('0', comm) == 0
  assert TextSerDe().deserialize(' 2 - 1/2 ', comm) == Fraction(3, 2)

def test_text_reads_base_element(comm):
  value = TextSerDe().deserialize('2*a^2 - 1', comm)
  assert isinstance(value, BaseElement)
  assert value == comm.element('a') ** 2 * 2 - 1

def test_text_rejects_bare_coefficient(comm):
  with pytest.raises(UsageError):
    TextSerDe().deserialize('(a) + 2', comm)

def test_text_rejects_mixed_legs(comm):
  with pytest.raises(UsageError):
    TextSerDe().deserialize('(a) + (a)⊗(b)', comm)

def test_text_syntax_error(comm):
  with pytest.raises(DslSyntaxError):
    TextSerDe().deserialize('(a|', comm)

def test_json_forms(comm):
  serde = JsonSerDe()
  assert json.loads(serde.serialize(word(comm, 'a', 'a*b', coeff=Fraction(3, 2)))) == {
    'terms': [ { 'coeff': '3/2', 'word': ['a', 'a*b'] } ]
  }
  assert json.loads(serde.serialize(TwoLegElement.from_pair(word(comm, 'a'), word(comm, '1')))) == {
    'terms': [ { 'coeff': '1', 'left': ['a'], 'right': ['1'] } ]
  }
  assert serde.serialize(Fraction(1, 3)) == '{"scalar":"1/3"}'
  assert serde.deserialize('{"terms":[]}', comm).is_zero

def test_json_rejects_unknown_object(comm):
  with pytest.raises(UsageError):
    JsonSerDe().deserialize('{"matrix":[]}', comm)

def test_report_round_trip(comm):
  report = CheckReport('nijenhuis', 'P', 'rsh', samples=4, expected=False)
  report.record_failure([word(comm, 'a')], word(comm, 'a'), word(comm, 'b'), law='lhs = rhs')
  report.note('random tail skipped')
  serde = JsonSerDe()
  copy = serde.deserialize(serde.serialize(report), comm)
  assert copy == report
  assert copy.ok

def test_report_line(comm):
  serde = TextSerDe()
  report = CheckReport('rota_baxter(1)', 'P', 'qsh(1)', samples=3)
  line = serde.serialize(report)
  assert line.startswith('PASS ')
  assert line.endswith('rota_baxter(1) on qsh(1): P [3 samples]')
  report = CheckReport('rota_baxter(1)', 'P', 'rsh', expected=False)
  report.record_failure([word(comm, 'a'), word(comm, 'b')], word(comm, 'a'), word(comm, 'b'))
  lines = serde.serialize(report).splitlines()
  assert lines[0].startswith('FAIL (expected FAIL)')
  assert lines[1] == '    inputs: (a), (b)'
  assert lines[2] == '    lhs:    (a)'
  assert lines[3] == '    rhs:    (b)'

def test_errored_report(comm):
  report = CheckReport('nij_conjugate_literal', 'N', 'rsh', passed=False, expected=False, errored=True)
  report.note('Uncaught exception: boom')
  assert TextSerDe().serialize(report).startswith('ERROR ')
  serde = JsonSerDe()
  copy = serde.deserialize(serde.serialize(report), comm)
  assert copy.errored
  assert not copy.ok

def test_save_to_file(tmp_path, comm):
  path = str(tmp_path / 'out.txt')
  serde = TextSerDe()
  serde.save_to_file(path, [word(comm, 'a'), Fraction(2)])
  serde.save_to_file(path, [word(comm, 'b'), Fraction(3)])
  with open(path, encoding='utf-8') as f:
    assert f.read() == '(b)\n3\n'
  assert not (tmp_path / 'out.txt.tmp').exists()
