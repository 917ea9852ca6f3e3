# SPDX-License-Identifier: Apache-2.0

import os

from collections import deque
from fractions import Fraction

class Config:
  """
  Captures session-level configuration.
  
  Values are taken from the first not-None source searched in the following order:
  
    1) Manually set value
    2) Environment variable
    3) Hard-coded default
  
  Keys are set/get in the same manner as a dictionary object.
  
  Attributes:
    base           : Base algebra mode, 'comm' or 'noncomm'.
    gens           : Generator declarations, e.g. 'h:primitive,g:grouplike,a~b'.
    product        : Product kind (sh, qsh, rsh, lsh). Unset means the full catalog for suites
                     and qsh for eval.
    theta          : Weight of the quasi-shuffle, an exact rational.
    case           : Bialgebra construction used by delta/eps/primitives (1 or 2).
    max_len        : Exhaustive sampling bound on word length.
    random_len     : Word length bound for random samples.
    random_samples : Number of random samples per check.
    order          : Spitzer truncation order.
    order_cap      : Largest accepted Spitzer order / primitive bound.
    seed           : Seed for every random choice.
    format         : Output format, 'text' or 'json'.
    engine         : Shuffle engine, 'recursive' or 'combinatorial'.
    max_procs      : Number of worker processes for check suites.
    log_file       : Progress log destination; os.devnull when unset.
    output         : File receiving the command output instead of STDOUT.
    silent         : Suppress the final status line.
    debug          : Print the resolved configuration before running.
  """
  
  def __init__(self):
    self._attr = {
      'base'           : { 'type': str     , 'env': 'ROTA_BASE'          , 'value': None, 'default': 'comm' },
      'gens'           : { 'type': str     , 'env': 'ROTA_GENS'          , 'value': None, 'default': 'a,b' },
      'product'        : { 'type': str     , 'env': 'ROTA_PRODUCT'       , 'value': None, 'default': None },
      'theta'          : { 'type': Fraction, 'env': 'ROTA_THETA'         , 'value': None, 'default': 1 },
      'case'           : { 'type': int     , 'env': 'ROTA_CASE'          , 'value': None, 'default': 2 },
      'max_len'        : { 'type': int     , 'env': 'ROTA_MAX_LEN'       , 'value': None, 'default': 3 },
      'random_len'     : { 'type': int     , 'env': 'ROTA_RANDOM_LEN'    , 'value': None, 'default': 4 },
      'random_samples' : { 'type': int     , 'env': 'ROTA_RANDOM_SAMPLES', 'value': None, 'default': 200 },
      'order'          : { 'type': int     , 'env': 'ROTA_ORDER'         , 'value': None, 'default': 4 },
      'order_cap'      : { 'type': int     , 'env': 'ROTA_ORDER_CAP'     , 'value': None, 'default': 6 },
      'seed'           : { 'type': int     , 'env': 'ROTA_SEED'          , 'value': None, 'default': 42 },
      'format'         : { 'type': str     , 'env': 'ROTA_FORMAT'        , 'value': None, 'default': 'text' },
      'engine'         : { 'type': str     , 'env': 'ROTA_ENGINE'        , 'value': None, 'default': 'recursive' },
      'max_procs'      : { 'type': int     , 'env': 'ROTA_MAX_PROCS'     , 'value': None, 'default': 1 },
      'log_file'       : { 'type': str     , 'env': 'ROTA_LOG_FILE'      , 'value': None, 'default': None },
      'output'         : { 'type': str     , 'env': None                 , 'value': None, 'default': None },
      'silent'         : { 'type': bool    , 'env': 'ROTA_SILENT'        , 'value': None, 'default': False },
      'debug'          : { 'type': bool    , 'env': 'ROTA_DEBUG'         , 'value': None, 'default': False }
    }
    self._iter_keys = None
  
  def __iter__(self):
    self._iter_keys = deque(self._attr.keys())
    return self
  
  def __next__(self):
    if not self._iter_keys:
      raise StopIteration
    else:
      return self._iter_keys.popleft()
  
  def __getitem__(self, key):
    """
    Emulates dictionary key get action, resolving the value from the highest priority source.
    
    Args:
      key (str): The key name for which to return the value for.
    
    Raises:
      KeyError: Given key is not valid for the Config object.
    """
    detl = self._attr.get(key)
    if not detl:
      raise KeyError('Config object does not store key: {}'.format(key))
    
    attr_type = detl['type']
    # Priority 1: Manually provided value.
    if detl['value'] is not None:
      return attr_type(detl['value'])
    # Priority 2: Environment-variable-stored value.
    if detl['env'] and os.environ.get(detl['env']) is not None:
      if attr_type == bool:
        return os.environ.get(detl['env']).upper().strip() != 'FALSE'
      return attr_type(os.environ.get(detl['env']))
    # Priority 3: Hard-coded default value.
    if detl['default'] is not None:
      return attr_type(detl['default'])
    
    return None
  
  def __setitem__(self, key, value):
    """
    Emulates dictionary key set action, casting the value to the key's type.
    
    Raises:
      KeyError: Given key is not valid for the Config object.
      ValueError: Value cannot be cast to the key's type.
    """
    if key not in self._attr:
      raise KeyError('Config object does not store key: {}'.format(key))
    if value is None:
      self._attr[key]['value'] = None
    elif self._attr[key]['type'] == bool and isinstance(value, str):
      self._attr[key]['value'] = value.upper().strip() != 'FALSE'
    else:
      self._attr[key]['value'] = self._attr[key]['type'](value)
  
  def __delitem__(self, key):
    if key not in self._attr:
      raise KeyError('Config object does not store key: {}'.format(key))
    self._attr[key]['value'] = None
  
  def __contains__(self, key):
    return key in self._attr
  
  def is_set(self, key):
    """
    Determines if key is set either by env var or manually set variable.
    
    Returns:
      Boolean indicating whether or not key is set. False if relying on default value, True otherwise.
    """
    detl = self._attr.get(key)
    if not detl:
      raise KeyError('Config object does not store key: {}'.format(key))
    if detl['value'] is not None:
      return True
    return bool(detl['env']) and os.environ.get(detl['env']) is not None
  
  def items(self):
    """
    Returns a plain dictionary of every key with its resolved value.
    """
    return { k: self[k] for k in self._attr }
  
  def print_attributes(self):
    """
    Prints out the Config object's key:value pairs, using the highest
    priority source as value.
    """
    for k in self._attr:
      print('{} : {}'.format(k, self[k]))
