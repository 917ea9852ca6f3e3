# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass
from functools import partial
from typing import Union

from pyrota.core.errors import UsageError
from pyrota.algebra.monomial import Monomial
from pyrota.algebra.scalar import ONE
from pyrota.algebra.tensor import TensorElement, render_word
from pyrota.operators.report import CheckReport, run_equations
from pyrota.dendriform.structure import LeftShiftTridend, QuasiShuffleTridend

PREC1 = 'prec1'
DOT1 = 'dot1'

def omega_word(word):
  """
  Ω on a basis word: each letter a of degree l becomes the block a, 1, ..., 1 of
  length l, with sign (-1)^(l+1).
  
  Returns:
    (sign, word)
  """
  sign = ONE
  letters = []
  for letter in word:
    if letter.degree % 2 == 0:
      sign = -sign
    letters.append(letter)
    letters.extend([Monomial.unit(letter.mode)] * (letter.degree - 1))
  return sign, tuple(letters)

def omega(x):
  """
  The embedding of the weight-1 quasi-shuffle structure into the left-shift structure.
  """
  x = QuasiShuffleTridend(x.mode).validate(x)
  terms = {}
  for word, coeff in x.terms.items():
    sign, image = omega_word(word)
    terms[image] = terms.get(image, 0) + sign * coeff
  return TensorElement(x.mode, terms, plus=True)

@dataclass(frozen=True)
class Leaf:
  letter: Monomial
  
  def evaluate(self, structure):
    return TensorElement.from_word((self.letter,), plus=True)
  
  def to_source(self):
    return '[{}]'.format(self.letter.render())

@dataclass(frozen=True)
class Node:
  op: str
  left: Union['Node', Leaf]
  right: Union['Node', Leaf]
  
  def evaluate(self, structure):
    method = structure.prec if self.op == PREC1 else structure.dot
    return method(self.left.evaluate(structure), self.right.evaluate(structure))
  
  def to_source(self):
    return '{}({};{})'.format(self.op, self.left.to_source(), self.right.to_source())

def omega_decompose(word):
  """
  Writes a qone basis word a1 ⊗ ... ⊗ an as a1 ≺₁ (a2 ≺₁ (... ≺₁ an)), each
  letter expanded as the •₁ product of its generators.
  
  Args:
    word: tuple of Monomial letters, or a TensorElement holding a single word with coefficient 1.
  """
  if isinstance(word, TensorElement):
    items = word.items()
    if len(items) != 1 or items[0][1] != ONE:
      raise UsageError('Decomposition needs a single basis word, got {}'.format(word.render()))
    word = items[0][0]
  if not word or any( m.is_unit for m in word ):
    raise UsageError('Cannot decompose {}: letters must be non-unit monomials'.format(render_word(word)))
  trees = []
  for letter in word:
    generators = [ Monomial.generator(letter.mode, name) for name in letter.letters ]
    tree = Leaf(generators[0])
    for gen in generators[1:]:
      tree = Node(DOT1, tree, Leaf(gen))
    trees.append(tree)
  result = trees[-1]
  for tree in reversed(trees[:-1]):
    result = Node(PREC1, tree, result)
  return result

def evaluate_tree(tree, structure=None):
  return tree.evaluate(structure or QuasiShuffleTridend(_tree_mode(tree)))

def _tree_mode(tree):
  while isinstance(tree, Node):
    tree = tree.left
  return tree.letter.mode

def omega_equations(qone, lsh, x, y):
  return [
    ('Ω(x≺₁y) = Ω(x)≺Ω(y)', omega(qone.prec(x, y)), lsh.prec(omega(x), omega(y))),
    ('Ω(x≻₁y) = Ω(x)≻Ω(y)', omega(qone.succ(x, y)), lsh.succ(omega(x), omega(y))),
    ('Ω(x•₁y) = Ω(x)•Ω(y)', omega(qone.dot(x, y)), lsh.dot(omega(x), omega(y)))
  ]

def check_omega_morphism(samples, engine=None):
  mode = samples.algebra.mode
  kwargs = { 'engine': engine } if engine else {}
  qone = QuasiShuffleTridend(mode, **kwargs)
  lsh = LeftShiftTridend(mode, **kwargs)
  report = CheckReport('omega_morphism', 'Ω', '{}->{}'.format(qone.carrier, lsh.carrier))
  return run_equations(report, samples.tuples(2), partial(omega_equations, qone, lsh))

def check_omega_injective(samples):
  """
  Ω sends distinct basis words to distinct signed basis words.
  """
  report = CheckReport('omega_injective', 'Ω', 'qone->plus_lsh')
  seen = {}
  for x in samples.basis():
    image = omega(x)
    (word, coeff), = image.items()
    if word in seen or abs(coeff) != ONE:
      report.record_failure([x, seen.get(word, x)], image, omega(seen.get(word, x)), 'Ω injective on basis words')
      return report
    seen[word] = x
    report.samples += 1
  return report

def check_decompose_roundtrip(samples):
  mode = samples.algebra.mode
  qone = QuasiShuffleTridend(mode)
  report = CheckReport('omega_decompose', 'decompose', qone.carrier)
  def equations(x):
    return [('evaluate(decompose(w)) = w', evaluate_tree(omega_decompose(x), qone), x)]
  return run_equations(report, samples.tuples(1), equations)
