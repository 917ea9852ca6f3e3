# SPDX-License-Identifier: Apache-2.0

class RotaError(ValueError):
  """
  Base class for every rejected input.
  
  Identity failures are never raised; they are reported as data in a
  CheckReport. Anything deriving from RotaError is a caller mistake and
  the command line maps it to exit status 2.
  """
  code = 'E_INPUT'
  
  def __init__(self, message):
    super().__init__(message)
    self.message = message
  
  def __str__(self):
    return '[{}] {}'.format(self.code, self.message)

class ModeMismatch(RotaError):
  code = 'E_MODE'

class CarrierViolation(RotaError):
  code = 'E_CARRIER'

class MissingCoproductRule(RotaError):
  code = 'E_COPRODUCT'

class NotMultiplicative(RotaError):
  code = 'E_MORPHISM'

class UnknownGenerator(RotaError):
  code = 'E_UNDECLARED'

class UsageError(RotaError):
  code = 'E_USAGE'

class DslTypeError(RotaError):
  code = 'E_TYPE'

class DslSyntaxError(RotaError):
  """
  Raised when an expression does not match the grammar.
  
  Attributes:
    line (int): 1-based line of the offending token.
    column (int): 1-based column of the offending token.
    expected (str): Description of what the parser expected at that point.
  """
  code = 'E_SYNTAX'
  
  def __init__(self, message, line, column, expected):
    super().__init__(message)
    self.line = line
    self.column = column
    self.expected = expected
  
  def __str__(self):
    return '[{}] line {}, column {}: {}'.format(self.code, self.line, self.column, self.expected)
