# SPDX-License-Identifier: Apache-2.0

import os

from datetime import datetime

from pyrota.logger.abstract import Logger

BANNER = '#' * 76

class FileLogger(Logger):
  """
  Appends "LEVEL - timestamp - text" lines to a file, os.devnull when no file is given.
  """
  
  def __init__(self, filename=None):
    self.filename = os.path.abspath(filename) if filename else os.devnull
    self.logfile_handle = None
  
  def open(self, open_message=True):
    if not self.logfile_handle:
      self.logfile_handle = open(self.filename, 'a')
      if open_message:
        self._banner('LOG START - {}'.format(datetime.now()))
    return self
  
  def _banner(self, *lines):
    self.logfile_handle.write('{}\n'.format(BANNER))
    for line in lines:
      self.logfile_handle.write('# {}\n'.format(line))
    self.logfile_handle.write('{}\n\n'.format(BANNER))
    self.logfile_handle.flush()
  
  def _emit_(self, level, text):
    if not self.logfile_handle:
      self.open()
    self.logfile_handle.write('{} - {} - {}\n'.format(level.upper(), datetime.now(), text))
    self.logfile_handle.flush()
  
  def suite_message(self, suite, check_count):
    if not self.logfile_handle:
      self.open()
    self.logfile_handle.write('\n')
    self._banner('SUITE {} - {} checks - {}'.format(suite, check_count, datetime.now()))
  
  def close(self, close_message=True):
    if self.logfile_handle:
      if close_message:
        self.logfile_handle.write('\n')
        self._banner('LOG END - {}'.format(datetime.now()))
      self.logfile_handle.close()
      self.logfile_handle = None
