# Copyright 2026 The CorrAudit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Portable pseudo-random permutations.

Permutations come from the SplitMix64 generator (Steele, Lea and Flood, 2014)
driving a Fisher-Yates shuffle, with bounded draws taken by rejection so that
no modulo bias is introduced. The output depends only on (n, seed), which keeps
golden values stable across platforms, numpy versions and other
implementations of the same two algorithms.

References:
  Steele et al, 2014: https://doi.org/10.1145/2714064.2660195
  Vigna's reference implementation: https://prng.di.unimi.it/splitmix64.c
"""
import numba
import numpy as np


_GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX_MULTIPLIER_1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX_MULTIPLIER_2 = np.uint64(0x94D049BB133111EB)
_SHIFT_1 = np.uint64(30)
_SHIFT_2 = np.uint64(27)
_SHIFT_3 = np.uint64(31)


@numba.njit
def _splitmix64_next(state):
  state = state + _GOLDEN_GAMMA
  z = state
  z = (z ^ (z >> _SHIFT_1)) * _MIX_MULTIPLIER_1
  z = (z ^ (z >> _SHIFT_2)) * _MIX_MULTIPLIER_2
  return state, z ^ (z >> _SHIFT_3)


@numba.njit
def _bounded_draw(state, bound):
  """Uniform draw from [0, bound) by rejecting the biased low range."""
  threshold = (np.uint64(0) - bound) % bound
  while True:
    state, raw = _splitmix64_next(state)
    if raw >= threshold:
      return state, raw % bound


@numba.njit
def splitmix64_stream(seed, count):
  """First `count` outputs of SplitMix64 seeded with `seed` (a uint64)."""
  out = np.empty(count, dtype=np.uint64)
  state = seed
  for i in range(count):
    state, value = _splitmix64_next(state)
    out[i] = value
  return out


@numba.njit
def fisher_yates_permutation(n, seed):
  """Permutation of 0..n-1 from a Fisher-Yates shuffle driven by SplitMix64.

  Args:
    n: Number of elements.
    seed: Generator seed as a uint64.
  Returns:
    An int64 array holding the permutation.
  """
  permutation = np.arange(n)
  state = seed
  for i in range(n - 1, 0, -1):
    state, draw = _bounded_draw(state, np.uint64(i + 1))
    j = np.int64(draw)
    tmp = permutation[i]
    permutation[i] = permutation[j]
    permutation[j] = tmp
  return permutation
