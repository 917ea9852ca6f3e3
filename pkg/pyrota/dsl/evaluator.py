# SPDX-License-Identifier: Apache-2.0

from pyrota.core.errors import DslTypeError
from pyrota.algebra.scalar import ONE, is_scalar, to_scalar
from pyrota.algebra.base import BaseElement
from pyrota.algebra.tensor import TensorElement, word_normalize
from pyrota.algebra.legs import TwoLegElement, FREE
from pyrota import shuffle
from pyrota.shuffle.kind import SH, RSH, LSH, qsh, SHUFFLE, QUASI_SHUFFLE, RIGHT_SHIFT
from pyrota.operators.shift import RightShift, LeftShift, LetterShift
from pyrota.operators.conjugate import Conjugate, RB_TILDE, NIJ_TILDE, TD_TILDE
from pyrota.dendriform.structure import LeftShiftTridend, QuasiShuffleTridend
from pyrota.dendriform.omega import omega
from pyrota.dendriform.involution import involution_extend
from pyrota.bialgebra.case1 import delta_case1, counit_case1
from pyrota.bialgebra.case2 import delta_case2, counit_case2, bracket_star
from pyrota.bialgebra.amalg import amalg_product
from pyrota.dsl.parser import parse_expr

SCALAR = 'scalar'
BASE = 'base element'
TENSOR = 'tensor element'
TWO_LEG = 'two-leg element'

def kind_of(value):
  if is_scalar(value):
    return SCALAR
  if isinstance(value, BaseElement):
    return BASE
  if isinstance(value, TwoLegElement):
    return TWO_LEG
  if isinstance(value, TensorElement):
    return TENSOR
  raise DslTypeError('Unsupported value {!r}'.format(value))

class Evaluator:
  """
  Evaluates expression trees against a Session.
  
  Values are Fractions, BaseElements, TensorElements or TwoLegElements. A
  scalar promotes to k*1 next to a base element and to k*1_K next to a tensor
  element; base elements are never promoted to words, so [a] and a differ.
  """
  
  def __init__(self, session):
    self.session = session
    self.mode = session.mode
    self.algebra = session.algebra
  
  def evaluate(self, node):
    method = getattr(self, '_eval_{}'.format(type(node).__name__), None)
    if method is None:
      raise DslTypeError('Cannot evaluate {}'.format(type(node).__name__))
    return method(node)
  
  def evaluate_source(self, src):
    return self.evaluate(parse_expr(src))
  
  # Coercions
  def as_base(self, value, where):
    if is_scalar(value):
      return BaseElement.scalar(self.mode, value)
    if isinstance(value, BaseElement):
      return self.algebra.check_element(value)
    raise DslTypeError('{} expects a base element, got a {}'.format(where, kind_of(value)))
  
  def as_tensor(self, value, where):
    if is_scalar(value):
      return TensorElement.empty(self.mode, to_scalar(value))
    if isinstance(value, TensorElement):
      return value
    raise DslTypeError('{} expects a tensor element, got a {}'.format(where, kind_of(value)))
  
  def as_two_leg(self, value, where):
    if isinstance(value, TwoLegElement):
      return value
    raise DslTypeError('{} expects a two-leg element, got a {}'.format(where, kind_of(value)))
  
  def as_scalar(self, value, where):
    if is_scalar(value):
      return to_scalar(value)
    raise DslTypeError('{} expects a rational number, got a {}'.format(where, kind_of(value)))
  
  # Leaves
  def _eval_Number(self, node):
    return node.value
  
  def _eval_Symbol(self, node):
    return self.algebra.element(node.name)
  
  def _eval_FunctionRef(self, node):
    raise DslTypeError('Function {} is used as a value; call it as {}(...)'.format(node.name, node.name))
  
  def _eval_EmptyWord(self, node):
    return TensorElement.empty(self.mode)
  
  def _eval_Word(self, node):
    letters = [ self.as_base(self.evaluate(x), 'a word letter') for x in node.letters ]
    return word_normalize(letters, self.mode).as_plus()
  
  # Arithmetic
  def _eval_Neg(self, node):
    return -self.evaluate(node.operand)
  
  def _eval_Power(self, node):
    value = self.evaluate(node.base)
    if is_scalar(value):
      return to_scalar(value) ** node.exponent
    return self.as_base(value, '^') ** node.exponent
  
  def _eval_BinOp(self, node):
    left = self.evaluate(node.left)
    right = self.evaluate(node.right)
    if node.op == '*':
      return self._multiply(left, right)
    if node.op == '-':
      right = -right
    return self._add(left, right)
  
  def _add(self, left, right):
    kinds = { kind_of(left), kind_of(right) }
    if kinds == {SCALAR}:
      return left + right
    if BASE in kinds and kinds <= {SCALAR, BASE}:
      return self.as_base(left, '+') + self.as_base(right, '+')
    if TENSOR in kinds and kinds <= {SCALAR, TENSOR}:
      return self.as_tensor(left, '+') + self.as_tensor(right, '+')
    if kinds == {TWO_LEG}:
      return left.with_policy(FREE) + right.with_policy(FREE)
    raise DslTypeError('Cannot add a {} and a {}'.format(kind_of(left), kind_of(right)))
  
  def _multiply(self, left, right):
    if is_scalar(left) and is_scalar(right):
      return left * right
    if is_scalar(left) or is_scalar(right):
      scalar, other = (left, right) if is_scalar(left) else (right, left)
      if isinstance(other, BaseElement):
        return other * to_scalar(scalar)
      return other.scale(scalar)
    if isinstance(left, BaseElement) and isinstance(right, BaseElement):
      return self.algebra.mul(left, right)
    raise DslTypeError('"*" multiplies scalars and base elements only, got a {} and a {}; use a named product such as qsh(x;y)'.format(kind_of(left), kind_of(right)))
  
  # Function calls
  def _eval_Apply(self, node):
    method = getattr(self, '_fn_{}'.format(node.function))
    return method(node.function, [ self.evaluate(x) for x in node.args ])
  
  def _arity(self, name, args, *counts):
    if len(args) not in counts:
      raise DslTypeError('{} takes {} argument(s), got {}'.format(name, ' or '.join( str(c) for c in counts ), len(args)))
  
  def _unary_tensor(self, name, args):
    self._arity(name, args, 1)
    return self.as_tensor(args[0], name)
  
  def _binary_tensor(self, name, args):
    self._arity(name, args, 2)
    return self.as_tensor(args[0], name), self.as_tensor(args[1], name)
  
  def _fn_P(self, name, args):
    return RightShift()(self._unary_tensor(name, args))
  
  def _fn_Q(self, name, args):
    return LeftShift()(self._unary_tensor(name, args))
  
  def _fn_Pu(self, name, args):
    self._arity(name, args, 2)
    letter = self.as_base(args[0], name)
    items = letter.items()
    if len(items) != 1 or items[0][1] != ONE:
      raise DslTypeError('Pu expects a single monomial as its letter, got {}'.format(letter.render()))
    return LetterShift(items[0][0])(self.as_tensor(args[1], name))
  
  def _product(self, kind, name, args):
    x, y = self._binary_tensor(name, args)
    return shuffle.product(kind, x, y, self.session.engine)
  
  def _fn_sh(self, name, args):
    return self._product(SH, name, args)
  
  def _fn_qsh(self, name, args):
    self._arity(name, args, 2, 3)
    theta = self.as_scalar(args[2], name) if len(args) == 3 else self.session.theta
    return self._product(qsh(theta), name, args[:2])
  
  def _fn_rsh(self, name, args):
    return self._product(RSH, name, args)
  
  def _fn_lsh(self, name, args):
    return self._product(LSH, name, args)
  
  def _fn_bsh(self, name, args):
    x, y = self._binary_tensor(name, args)
    return shuffle.product_plus(self.session.kind, x, y, self.session.engine)
  
  def _tridend(self, structure, op, name, args):
    x, y = self._binary_tensor(name, args)
    return structure.apply(op, x, y)
  
  def _fn_prec(self, name, args):
    return self._tridend(LeftShiftTridend(self.mode, self.session.engine), 'prec', name, args)
  
  def _fn_succ(self, name, args):
    return self._tridend(LeftShiftTridend(self.mode, self.session.engine), 'succ', name, args)
  
  def _fn_dot(self, name, args):
    return self._tridend(LeftShiftTridend(self.mode, self.session.engine), 'dot', name, args)
  
  def _fn_star(self, name, args):
    return self._tridend(LeftShiftTridend(self.mode, self.session.engine), 'star', name, args)
  
  def _fn_prec1(self, name, args):
    return self._tridend(QuasiShuffleTridend(self.mode, self.session.engine), 'prec', name, args)
  
  def _fn_succ1(self, name, args):
    return self._tridend(QuasiShuffleTridend(self.mode, self.session.engine), 'succ', name, args)
  
  def _fn_dot1(self, name, args):
    return self._tridend(QuasiShuffleTridend(self.mode, self.session.engine), 'dot', name, args)
  
  def _fn_star1(self, name, args):
    return self._tridend(QuasiShuffleTridend(self.mode, self.session.engine), 'star', name, args)
  
  def _fn_dagger(self, name, args):
    self._arity(name, args, 1)
    value = args[0]
    if isinstance(value, BaseElement):
      return self.algebra.involution(value)
    return involution_extend(self.as_tensor(value, name), self.algebra)
  
  def _fn_delta(self, name, args):
    x = self._unary_tensor(name, args)
    if self.session.case == 1:
      return delta_case1(self.session.kind, x, self.algebra)
    return delta_case2(x)
  
  def _fn_eps(self, name, args):
    x = self._unary_tensor(name, args)
    if self.session.case == 1:
      return counit_case1(self.session.kind, x, self.algebra)
    return counit_case2(x)
  
  def _fn_omega(self, name, args):
    return omega(self._unary_tensor(name, args))
  
  def _fn_bstar(self, name, args):
    return bracket_star(self._unary_tensor(name, args))
  
  def _fn_tilde(self, name, args):
    x = self._unary_tensor(name, args)
    kind = self.session.kind
    if kind.tag in (SHUFFLE, QUASI_SHUFFLE):
      op = Conjugate(RightShift(), RB_TILDE, theta=kind.theta)
    elif kind.tag == RIGHT_SHIFT:
      op = Conjugate(RightShift(), NIJ_TILDE)
    else:
      op = Conjugate(RightShift(), TD_TILDE, ambient=self.session.ambient())
    return op(x)
  
  def _fn_amalg(self, name, args):
    self._arity(name, args, 2)
    x = self.as_two_leg(args[0], name)
    y = self.as_two_leg(args[1], name)
    return amalg_product(x, y, RSH, self.session.engine)

def evaluate(expr, session):
  """
  Evaluates a parsed expression (or DSL source text) in the given session.
  """
  evaluator = Evaluator(session)
  if isinstance(expr, str):
    return evaluator.evaluate_source(expr)
  return evaluator.evaluate(expr)
