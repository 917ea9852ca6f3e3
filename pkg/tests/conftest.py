# SPDX-License-Identifier: Apache-2.0

import pytest

from pyrota.algebra.base import BaseAlgebra
from pyrota.operators.samples import SamplePolicy

@pytest.fixture
def comm():
  """Polynomial algebra on a, b."""
  return BaseAlgebra.from_spec('comm', 'a,b')

@pytest.fixture
def noncomm():
  """Free noncommutative algebra on a, b."""
  return BaseAlgebra.from_spec('noncomm', 'a,b')

@pytest.fixture
def hopf():
  """Commutative algebra with a primitive and a group-like generator."""
  return BaseAlgebra.from_spec('comm', 'h:primitive,g:grouplike')

@pytest.fixture
def small_samples(comm):
  """Exhaustive words up to length 2 plus a handful of random ones."""
  return SamplePolicy(comm, plus=True, max_len=2, random_len=3, random_samples=5, seed=1)
