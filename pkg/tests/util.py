# SPDX-License-Identifier: Apache-2.0

from pyrota.algebra.tensor import TensorElement

def word(algebra, *letters, coeff=1, plus=None):
  """Builds coeff*(l1|l2|...) from monomial texts such as 'a', 'a*b' or '1'."""
  letters = tuple( algebra.parse_monomial(x) for x in letters )
  return TensorElement.from_word(letters, coeff, mode=algebra.mode, plus=plus)

def tensor(algebra, *pairs, plus=False):
  """Sums coeff*word over (coeff, [letters]) pairs."""
  result = TensorElement.zero(algebra.mode, plus=plus)
  for coeff, letters in pairs:
    result = result + word(algebra, *letters, coeff=coeff, plus=plus)
  return result
