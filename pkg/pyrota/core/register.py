# SPDX-License-Identifier: Apache-2.0

import pyrota.core.constants as constants

class CheckRegister:
  """
  Tracks every registered check by status. Checks keep their registration
  order inside each status bucket, and reports are emitted in that order.
  """
  
  def __init__(self):
    self._cur_check_id = 0
    self.register = {
      constants.STATUS_PENDING   : [],
      constants.STATUS_COMPLETED : [],
      constants.STATUS_FAILED    : []
    }
  
  @property
  def pending_checks(self):
    return self.register[constants.STATUS_PENDING]
  
  @property
  def completed_checks(self):
    return self.register[constants.STATUS_COMPLETED]
  
  @property
  def failed_checks(self):
    return self.register[constants.STATUS_FAILED]
  
  @property
  def all_checks(self):
    found = []
    for bucket in self.register.values():
      found.extend(bucket)
    return sorted(found, key=lambda c: c.id)
  
  def add_check(self, check):
    """
    Registers a pending check and assigns it the next id.
    
    Raises:
      ValueError: A check with the same name is already registered.
    """
    if self.find_check(name=check.name):
      raise ValueError('Check name {} has already been registered'.format(check.name))
    self._cur_check_id += 1
    check.id = self._cur_check_id
    self.pending_checks.append(check)
    return check
  
  def add_checks(self, checks):
    for check in checks:
      self.add_check(check)
    return self
  
  def find_check(self, **kwargs):
    for check in self.all_checks:
      if 'id' in kwargs and check.id == kwargs['id']:
        return check
      if 'name' in kwargs and check.name == kwargs['name']:
        return check
    return None
  
  def set_status(self, check, status):
    for bucket in self.register.values():
      if check in bucket:
        bucket.remove(check)
    self.register[status].append(check)
  
  def exec_only(self, names):
    """
    Keeps pending only the checks named in names, or whose name starts with one
    of them followed by '/'; the others are dropped from the register.
    """
    prefixes = tuple( n.rstrip('/') + '/' for n in names )
    keep = set(names)
    self.register[constants.STATUS_PENDING] = [ c for c in self.pending_checks if c.name in keep or c.name.startswith(prefixes) ]
    return self
