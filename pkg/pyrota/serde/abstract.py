# SPDX-License-Identifier: Apache-2.0

import os

from abc import ABC, abstractmethod

class SerDe(ABC):
  """
  Implementations of this abstract class translate between kernel values
  (scalars, base elements, tensor and two-leg elements, check reports) and
  their textual representation.
  """
  
  @abstractmethod
  def serialize(self, value):
    """
    Translates a value to its canonical, deterministic text.
    """
    pass
  
  @abstractmethod
  def deserialize(self, text, algebra):
    """
    Translates text back to a value whose letters live in algebra's mode.
    """
    pass
  
  def serialize_all(self, values):
    return '\n'.join( self.serialize(v) for v in values )
  
  def save_to_file(self, filepath, values):
    tmp  = filepath+'.tmp'
    perm = filepath
    
    try:
      with open(tmp, 'w', encoding='utf-8') as file:
        file.write(self.serialize_all(values))
        file.write('\n')
      if os.path.isfile(perm):
        os.unlink(perm)
      os.rename(tmp, perm)
    except Exception:
      print('Failure in save_to_file()')
      raise
