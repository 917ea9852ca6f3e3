# SPDX-License-Identifier: Apache-2.0

from collections import defaultdict
from functools import lru_cache
from itertools import product
from math import comb
from types import MappingProxyType

from pyrota.core.errors import ModeMismatch, MissingCoproductRule, UnknownGenerator, UsageError
from pyrota.algebra.scalar import ONE, ZERO, to_scalar, is_scalar, render_terms
from pyrota.algebra.monomial import Monomial, COMMUTATIVE, check_mode
from pyrota.algebra.generator import Generator, PRIMITIVE, GROUPLIKE
from pyrota.algebra.legs import TwoLegElement, COMODULE

class BaseElement:
  """
  Finite rational combination of base monomials.
  """

  __slots__ = ('_mode', '_terms')

  def __init__(self, mode, terms=None):
    self._mode = check_mode(mode)
    clean = {}
    for mono, coeff in (terms or {}).items():
      if mono.mode != mode:
        raise ModeMismatch('Monomial {} is not in {} mode'.format(mono, mode))
      coeff = to_scalar(coeff)
      if coeff:
        clean[mono] = coeff
    self._terms = clean

  @classmethod
  def zero(cls, mode):
    return cls(mode)

  @classmethod
  def scalar(cls, mode, value):
    return cls(mode, {Monomial.unit(mode): value})

  @classmethod
  def one(cls, mode):
    return cls.scalar(mode, ONE)

  @classmethod
  def monomial(cls, mono, coeff=ONE):
    return cls(mono.mode, {mono: coeff})

  @property
  def mode(self):
    return self._mode

  @property
  def terms(self):
    return MappingProxyType(self._terms)

  @property
  def is_zero(self):
    return not self._terms

  def items(self):
    return sorted(self._terms.items(), key=lambda t: t[0].sort_key)

  def coefficient(self, mono):
    return self._terms.get(mono, ZERO)

  def _check(self, other):
    if not isinstance(other, BaseElement):
      raise TypeError('Expected a BaseElement, got {}'.format(type(other).__name__))
    if other._mode != self._mode:
      raise ModeMismatch('Cannot combine {} and {} base elements'.format(self._mode, other._mode))

  def __add__(self, other):
    if is_scalar(other):
      other = BaseElement.scalar(self._mode, other)
    self._check(other)
    acc = dict(self._terms)
    for mono, coeff in other._terms.items():
      acc[mono] = acc.get(mono, ZERO) + coeff
    return BaseElement(self._mode, acc)

  __radd__ = __add__

  def __neg__(self):
    return BaseElement(self._mode, { m: -c for m, c in self._terms.items() })

  def __sub__(self, other):
    return self + (-other)

  def __rsub__(self, other):
    return (-self) + other

  def __mul__(self, other):
    if is_scalar(other):
      k = to_scalar(other)
      return BaseElement(self._mode, { m: c * k for m, c in self._terms.items() })
    self._check(other)
    acc = defaultdict(lambda: ZERO)
    for (m1, c1), (m2, c2) in product(self._terms.items(), other._terms.items()):
      acc[m1 * m2] += c1 * c2
    return BaseElement(self._mode, acc)

  def __rmul__(self, other):
    if is_scalar(other):
      return self * other
    return NotImplemented

  def __pow__(self, n):
    result = BaseElement.one(self._mode)
    for _ in range(n):
      result = result * self
    return result

  def __bool__(self):
    return bool(self._terms)

  def __eq__(self, other):
    if is_scalar(other):
      other = BaseElement.scalar(self._mode, other)
    if not isinstance(other, BaseElement):
      return NotImplemented
    return self._mode == other._mode and self._terms == other._terms

  __hash__ = None

  def __reduce__(self):
    return (BaseElement, (self._mode, self._terms))

  def render(self):
    return render_terms([ (c, m.render()) for m, c in self.items() ], unit_body='1')

  def __repr__(self):
    return self.render()

class BaseAlgebra:
  """
  The base algebra A: free commutative (polynomial) or free noncommutative
  algebra over declared generators, with optional coproduct rules and an
  involution pairing.

  Args:
    mode (str): 'comm' or 'noncomm'.
    generators (iterable): Generator objects or declaration strings (see Generator.parse).
  """

  def __init__(self, mode=COMMUTATIVE, generators=()):
    self._mode = check_mode(mode)
    self._generators = {}
    for gen in generators:
      if isinstance(gen, str):
        gen = Generator.parse(gen)
      if gen.name in self._generators:
        raise UsageError('Generator {} declared twice'.format(gen.name))
      self._generators[gen.name] = gen
    self._pairing = self._resolve_pairing()

  @classmethod
  def from_spec(cls, mode, text):
    """
    Builds an algebra from a comma-separated declaration list, e.g. 'h:primitive,g:grouplike,a~b'.
    """
    decls = [ x for x in (text or '').split(',') if x.strip() ]
    return cls(mode, decls)

  def _resolve_pairing(self):
    pairing = {}
    for name, gen in self._generators.items():
      pairing[name] = gen.involution_image
    for name, image in list(pairing.items()):
      if image not in self._generators:
        raise UnknownGenerator('Involution image {} of {} is not declared'.format(image, name))
      if image != name:
        declared = self._generators[image].involution_image
        if declared not in (image, name):
          raise UsageError('Involution pairing {}~{} conflicts with {}~{}'.format(name, image, image, declared))
        pairing[image] = name
    return pairing

  @property
  def mode(self):
    return self._mode

  @property
  def is_commutative(self):
    return self._mode == COMMUTATIVE

  @property
  def names(self):
    return sorted(self._generators)

  @property
  def generators(self):
    return [ self._generators[x] for x in self.names ]

  @property
  def pairing(self):
    return dict(self._pairing)

  def spec(self):
    decls = []
    for gen in self.generators:
      decl = gen.name
      if gen.coproduct_rule:
        decl += ':' + gen.coproduct_rule
      if self._pairing[gen.name] != gen.name:
        decl += '~' + self._pairing[gen.name]
      decls.append(decl)
    return ','.join(decls)

  def generator(self, name):
    if name not in self._generators:
      raise UnknownGenerator('Generator {} is not declared'.format(name))
    return self._generators[name]

  def unit_monomial(self):
    return Monomial.unit(self._mode)

  def monomial(self, name):
    self.generator(name)
    return Monomial.generator(self._mode, name)

  def parse_monomial(self, text):
    """
    Reads a monomial in canonical text form, rejecting undeclared generators.
    """
    mono = Monomial.parse(self._mode, text)
    for name in mono.generators:
      self.generator(name)
    return mono
  
  def element(self, name, coeff=ONE):
    return BaseElement.monomial(self.monomial(name), coeff)

  def one(self):
    return BaseElement.one(self._mode)

  def check_element(self, x):
    if x.mode != self._mode:
      raise ModeMismatch('Element in {} mode used with a {} algebra'.format(x.mode, self._mode))
    for mono in x.terms:
      for name in mono.generators:
        self.generator(name)
    return x

  def monomials_up_to(self, degree, names=None):
    """
    All monomials of degree 1..degree over the given (default: all) generators, in graded lex order.
    """
    names = sorted(names or self.names)
    found = set()
    for d in range(1, degree + 1):
      for seq in product(names, repeat=d):
        found.add(Monomial.from_letters(self._mode, seq))
    return sorted(found, key=lambda m: m.sort_key)

  def mul(self, x, y):
    return self.check_element(x) * self.check_element(y)

  def involute_monomial(self, mono):
    for name in mono.generators:
      self.generator(name)
    return mono.substitute(self._pairing)

  def involution(self, x):
    self.check_element(x)
    return BaseElement(self._mode, { self.involute_monomial(m): c for m, c in x.terms.items() })

  def _require_rules(self, mono):
    if self._mode != COMMUTATIVE:
      raise ModeMismatch('Coproducts are only defined over a commutative base')
    for name in mono.generators:
      if self.generator(name).coproduct_rule is None:
        raise MissingCoproductRule('Generator {} carries no coproduct rule'.format(name))

  def monomial_coproduct(self, mono):
    """
    Returns {(left monomial, right monomial): coefficient} for δ(mono).
    """
    self._require_rules(mono)
    return dict(_coproduct_terms(mono, tuple(sorted( (n, self._generators[n].coproduct_rule) for n in mono.generators ))))

  def monomial_counit(self, mono):
    self._require_rules(mono)
    for name in mono.generators:
      if self._generators[name].coproduct_rule == PRIMITIVE:
        return ZERO
    return ONE

  def coproduct(self, x):
    self.check_element(x)
    acc = defaultdict(lambda: ZERO)
    for mono, coeff in x.terms.items():
      for (left, right), c in self.monomial_coproduct(mono).items():
        acc[((left,), (right,))] += coeff * c
    return TwoLegElement(self._mode, acc, policy=COMODULE)

  def counit(self, x):
    self.check_element(x)
    return sum( (c * self.monomial_counit(m) for m, c in x.terms.items()), ZERO )

  def __eq__(self, other):
    return isinstance(other, BaseAlgebra) and self._mode == other._mode and self.spec() == other.spec()

  def __hash__(self):
    return hash((self._mode, self.spec()))

  def __repr__(self):
    return 'BaseAlgebra({}, {})'.format(self._mode, self.spec())

COPRODUCT_CACHE_SIZE = 1 << 12

@lru_cache(maxsize=COPRODUCT_CACHE_SIZE)
def _coproduct_terms(mono, rules):
  rules = dict(rules)
  mode = mono.mode
  acc = {(Monomial.unit(mode), Monomial.unit(mode)): ONE}
  for name, exp in mono.key:
    gen = Monomial.generator(mode, name)
    if rules[name] == GROUPLIKE:
      factor = {(gen ** exp, gen ** exp): ONE}
    else:
      factor = { (gen ** k, gen ** (exp - k)): to_scalar(comb(exp, k)) for k in range(exp + 1) }
    nxt = defaultdict(lambda: ZERO)
    for ((l1, r1), c1), ((l2, r2), c2) in product(acc.items(), factor.items()):
      nxt[(l1 * l2, r1 * r2)] += c1 * c2
    acc = nxt
  return tuple(acc.items())
