# SPDX-License-Identifier: Apache-2.0

from functools import partial
from math import comb, factorial

from pyrota.algebra.base import BaseAlgebra
from pyrota.algebra.tensor import TensorElement, word_normalize
from pyrota import shuffle
from pyrota.shuffle.kind import SH, RSH, LSH, QUASI_SHUFFLE, RIGHT_SHIFT, LEFT_SHIFT, qsh
from pyrota.operators.ambient import TensorAmbient
from pyrota.operators.report import CheckReport, run_equations
from pyrota.serde.text import TextSerDe

def distinct_letter_pairs(mode, max_total=6):
  """
  One word pair (x1..xm, xm+1..xm+n) per pair of lengths with 0 < m+n <= max_total.
  Every pair of words with distinct generator letters is a relabelling of one of these.
  """
  algebra = BaseAlgebra(mode, [ 'x{}'.format(i) for i in range(1, max_total + 1) ])
  letters = [ algebra.monomial(x) for x in algebra.names ]
  pairs = []
  for total in range(1, max_total + 1):
    for m in range(total + 1):
      pairs.append((tuple(letters[:m]), tuple(letters[m:total])))
  return pairs

def expected_term_count(kind, m, n):
  if not kind.has_contractions:
    return comb(m + n, m)
  return sum( factorial(m + n - j) // (factorial(j) * factorial(m - j) * factorial(n - j)) for j in range(min(m, n) + 1) )

def expected_lengths_ok(kind, m, n, element):
  lengths = element.lengths
  if kind.tag == QUASI_SHUFFLE:
    return all( max(m, n) <= l <= m + n for l in lengths )
  return lengths == [m + n]

def engine_equations(kind, u, v):
  recursive = shuffle.word_product(kind, u, v, shuffle.RECURSIVE)
  combinatorial = shuffle.word_product(kind, u, v, shuffle.COMBINATORIAL)
  m, n = len(u), len(v)
  return [
    ('recursive = combinatorial', recursive, combinatorial),
    ('term count', len(recursive.terms), expected_term_count(kind, m, n)),
    ('grading', expected_lengths_ok(kind, m, n, recursive), True)
  ]

def check_engines_agree(kind, mode, max_total=6):
  """
  Both engines give the same product on every word pair with distinct generator
  letters and total length up to max_total, with the expected number of terms.
  """
  report = CheckReport('engines_agree', 'recursive|combinatorial', '{}[{}]'.format(kind.label, mode))
  return run_equations(report, distinct_letter_pairs(mode, max_total), partial(engine_equations, kind))

def weight_zero_equations(engine, x, y):
  return [('qsh(0) = sh', shuffle.product(qsh(0), x, y, engine), shuffle.product(SH, x, y, engine))]

def check_weight_zero(samples, engine=shuffle.RECURSIVE):
  report = CheckReport('qsh(0)=sh', '-', '[{}]'.format(samples.algebra.mode))
  return run_equations(report, samples.tuples(2), partial(weight_zero_equations, engine))

def unit_word_equations(kind, engine, max_units, x):
  mode = x.mode
  laws = []
  for n in range(1, max_units + 1):
    units = TensorElement.unit_word(mode, n).as_plain()
    left = shuffle.product(kind, units, x, engine)
    right = shuffle.product(kind, x, units, engine)
    shifted = units.concat(x) if kind.tag == LEFT_SHIFT else x.concat(units)
    laws.append(('1^{n} • X = X • 1^{n}'.format(n=n), left, right))
    laws.append(('X • 1^{n} = shifted X'.format(n=n), right, shifted.as_plain()))
  return laws

def check_unit_words(kind, samples, engine=shuffle.RECURSIVE, max_units=3):
  """
  Unit words are central for the shift shuffles: X •ℓ 1^n = 1^n ⊗ X and X •r 1^n = X ⊗ 1^n.
  """
  if kind.tag not in (RIGHT_SHIFT, LEFT_SHIFT):
    raise ValueError('Unit word laws hold for rsh and lsh only')
  report = CheckReport('unit_words', '-', '{}[{}]'.format(kind.label, samples.algebra.mode))
  return run_equations(report, samples.tuples(1), partial(unit_word_equations, kind, engine, max_units))

# Worked products in the text form: (kind, gens, left, right, plus, expected)
WORKED_EXAMPLES = (
  (SH, 'a1,b1,b2', '(a1)', '(b1|b2)', False, '(a1|b1|b2) + (b1|a1|b2) + (b1|b2|a1)'),
  (qsh(2), 'a1,b1,b2', '(a1)', '(b1|b2)', False,
    '(a1|b1|b2) + (b1|a1|b2) + (b1|b2|a1) + 2*(a1*b1|b2) + 2*(b1|a1*b2)'),
  (RSH, 'a1,b1,b2', '(a1)', '(b1|b2)', False,
    '(a1|b1|b2) + (b1|a1|b2) + (b1|b2|a1) - (1|a1*b1|b2) - (b1|1|a1*b2)'),
  (LSH, 'a1,b1,b2', '(a1)', '(b1|b2)', False,
    '(a1|b1|b2) + (b1|a1|b2) + (b1|b2|a1) - (a1*b1|1|b2) - (b1|a1*b2|1)'),
  (LSH, 'a,b', '(a)', '(b)', False, '(a|b) + (b|a) - (a*b|1)'),
  (RSH, 'a,b', '(a)', '(b)', False, '(a|b) + (b|a) - (1|a*b)'),
  (LSH, 'a,b,x,y', '(a|x)', '(b|y)', True, '(a*b|x|y) + (a*b|y|x) - (a*b|x*y|1)')
)

def worked_example_equations(engine, kind, gens, left, right, plus, expected):
  serde = TextSerDe()
  algebra = BaseAlgebra.from_spec('comm', gens)
  x = serde.deserialize(left, algebra)
  y = serde.deserialize(right, algebra)
  ambient = TensorAmbient(algebra.mode, kind, plus=plus, engine=engine)
  return [('{} {} {}'.format(left, kind.label, right), ambient.mul(x, y), serde.deserialize(expected, algebra))]

def check_worked_examples(engine=shuffle.RECURSIVE):
  report = CheckReport('worked_examples', '-', engine)
  return run_equations(report, WORKED_EXAMPLES, partial(worked_example_equations, engine))

def count_words(kind, mode, left, right):
  algebra = BaseAlgebra(mode, sorted(set(left + right)))
  u = word_normalize([ algebra.element(x) for x in left ])
  v = word_normalize([ algebra.element(x) for x in right ])
  return len(shuffle.product(kind, u, v).terms)

# (kind, left letters, right letters, number of distinct words)
WORD_COUNTS = (
  (RSH, ('a', 'b'), ('c', 'd'), 13),
  (LSH, ('a', 'b'), ('c', 'd'), 13),
  (SH, ('a', 'b'), ('c', 'd'), 6),
  (qsh(1), ('a', 'b', 'c'), ('d', 'e'), 25)
)

def word_count_equations(mode, kind, left, right, expected):
  return [('#words {} {} {}'.format(left, kind.label, right), count_words(kind, mode, left, right), expected)]

def check_word_counts(mode):
  report = CheckReport('word_counts', '-', '[{}]'.format(mode))
  return run_equations(report, WORD_COUNTS, partial(word_count_equations, mode))
