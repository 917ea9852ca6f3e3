# SPDX-License-Identifier: Apache-2.0

from functools import partial
from itertools import combinations_with_replacement

from pyrota.core.errors import CarrierViolation, ModeMismatch, NotMultiplicative, UnknownGenerator
from pyrota.algebra.monomial import COMMUTATIVE
from pyrota.algebra.tensor import TensorElement
from pyrota.shuffle import RECURSIVE
from pyrota.operators.abstract import Operator
from pyrota.operators.ambient import TensorAmbient
from pyrota.operators.shift import RightShift
from pyrota.operators.report import CheckReport, run_equations

class LiftedMorphism(Operator):
  """
  The lift φ~ of a base morphism φ: A -> T+(A') to the free algebra (T+(A), •̄^q, P_A).
  
    φ~((a)) = φ(a)
    φ~(a ⊗ U) = φ(a) •̄ P(φ~(U))
  
  φ is given on generators and extended multiplicatively to monomials, with
  φ(1) the unit (1).
  """
  
  produces_plus = True
  
  def __init__(self, images, ambient, operator, label='phi~'):
    self.images = dict(images)
    self.ambient = ambient
    self.operator = operator
    self.label = label
    self._monomial_images = {}
  
  @property
  def name(self):
    return self.label
  
  def image_of(self, mono):
    """
    φ(mono), multiplicative extension of the generator images.
    """
    if mono not in self._monomial_images:
      result = self.ambient.unit()
      for name in mono.letters:
        if name not in self.images:
          raise UnknownGenerator('No image given for generator {}'.format(name))
        result = self.ambient.mul(result, self.images[name])
      self._monomial_images[mono] = result
    return self._monomial_images[mono]
  
  def apply_word(self, word, mode):
    if not word:
      raise CarrierViolation('φ~ is defined on T+(A); 1_K has no image')
    result = self.image_of(word[-1])
    for letter in reversed(word[:-1]):
      result = self.ambient.mul(self.image_of(letter), self.operator(result))
    return result
  
  def apply(self, x):
    result = self.ambient.zero()
    for word, coeff in x.terms.items():
      result = result + self.apply_word(word, x.mode).scale(coeff)
    return result

  def apply_word_recursive(self, word):
    """
    Left-to-right unfolding of the defining induction, used as a cross-check of apply_word.
    """
    if not word:
      raise CarrierViolation('φ~ is defined on T+(A); 1_K has no image')
    head = self.image_of(word[0])
    if len(word) == 1:
      return head
    return self.ambient.mul(head, self.operator(self.apply_word_recursive(word[1:])))
  
  def apply_recursive(self, x):
    result = self.ambient.zero()
    for word, coeff in x.terms.items():
      result = result + self.apply_word_recursive(word).scale(coeff)
    return result
  
  def __getstate__(self):
    return (self.images, self.ambient, self.operator, self.label)
  
  def __setstate__(self, state):
    self.images, self.ambient, self.operator, self.label = state
    self._monomial_images = {}

def lift_morphism(phi, kind, source, target_mode=None, operator=None, engine=RECURSIVE):
  """
  Validates φ and returns its lift φ~.
  
  Args:
    phi (dict): Generator name -> TensorElement in T+(A'); missing generators map to their i_A image.
    kind (ProductKind): Product of the target free algebra.
    source (BaseAlgebra): Domain of φ.
    target_mode (str): Mode of A'; defaults to the source mode.
    operator (Operator): Target operator; P_A by default.
  
  Raises:
    NotMultiplicative: when generator images fail to commute over a commutative source.
  """
  target_mode = target_mode or source.mode
  ambient = TensorAmbient(target_mode, kind, plus=True, engine=engine)
  images = {}
  for name in source.names:
    if name in phi:
      image = phi[name]
      if image.mode != target_mode:
        raise ModeMismatch('Image of {} is not in {} mode'.format(name, target_mode))
      images[name] = ambient.embed(image)
    elif target_mode == source.mode:
      images[name] = TensorElement.from_word((source.monomial(name),), plus=True)
    else:
      raise UnknownGenerator('No image given for generator {}'.format(name))
  for name in phi:
    source.generator(name)
  if source.mode == COMMUTATIVE:
    for x, y in combinations_with_replacement(source.names, 2):
      if ambient.mul(images[x], images[y]) != ambient.mul(images[y], images[x]):
        raise NotMultiplicative('Images of {} and {} do not commute, so φ is not multiplicative on {}*{}'.format(x, y, x, y))
  return LiftedMorphism(images, ambient, operator or RightShift())

def lift_equations(lift, source_ambient, x, y):
  mul = source_ambient.mul
  P = RightShift()
  return [
    ('phi~(xy) = phi~(x)phi~(y)', lift(mul(x, y)), lift.ambient.mul(lift(x), lift(y))),
    ('phi~(P(x)) = P(phi~(x))', lift(P(x)), lift.operator(lift(x))),
    ('recursive = iterative', lift.apply_recursive(x), lift(x))
  ]

def check_lift(lift, kind, samples, engine=RECURSIVE):
  """
  Samples the morphism and operator-compatibility laws of a lift over pairs from samples.
  """
  source_ambient = TensorAmbient(samples.algebra.mode, kind, plus=True, engine=engine)
  report = CheckReport('lift_morphism', lift.name, source_ambient.label)
  return run_equations(report, samples.tuples(2), partial(lift_equations, lift, source_ambient))

def identity_lift_equations(lift, x):
  return [('phi~ = id', lift(x), x)]

def check_identity_lift(kind, samples, engine=RECURSIVE):
  """
  The lift of the inclusion i_A is the identity on T+(A).
  """
  lift = lift_morphism({}, kind, samples.algebra, engine=engine)
  ambient = TensorAmbient(samples.algebra.mode, kind, plus=True, engine=engine)
  report = CheckReport('lift_identity', lift.name, ambient.label)
  return run_equations(report, samples.tuples(1), partial(identity_lift_equations, lift))
