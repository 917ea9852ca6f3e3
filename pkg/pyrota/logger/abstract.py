# SPDX-License-Identifier: Apache-2.0

from abc import ABC, abstractmethod

class Logger(ABC):
  """
  Progress log of a check run. Kept apart from STDOUT so that command output
  depends only on the inputs.
  """
  
  @abstractmethod
  def open(self, open_message=True):
    """
    Open stream for target log object.
    """
    raise NotImplementedError('Method "open" is not implemented')
  
  @abstractmethod
  def _emit_(self, level, text):
    """
    Write log message with given level.
    """
    raise NotImplementedError('Method _emit_ is not implemented')
  
  def info(self, text):
    self._emit_('INFO', text)
  
  def success(self, text):
    self._emit_('SUCCESS', text)
  
  def warn(self, text):
    self._emit_('WARN', text)
  
  def error(self, text):
    self._emit_('ERROR', text)
  
  def _system_(self, text):
    """
    Reserved for engine control messages.
    """
    self._emit_('SYSTEM', text)
  
  @abstractmethod
  def suite_message(self, suite, check_count):
    """
    Write a banner marking the start of a check suite.
    """
    raise NotImplementedError('Method "suite_message" is not implemented')
  
  @abstractmethod
  def close(self):
    raise NotImplementedError('Method "close" is not implemented')
  