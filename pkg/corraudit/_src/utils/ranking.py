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

"""Pairwise comparison of rankings."""
import numba
import numpy as np


@numba.njit
def count_discordant_pairs(groups_a: np.ndarray, groups_b: np.ndarray) -> int:
  """Counts pairs ordered one way by `groups_a` and the other by `groups_b`.

  Each array maps an item to the position of its tie group in a ranking, so
  items sharing a tie group compare as equal and never form a discordant pair.

  Args:
    groups_a: Tie-group position of every item in the first ranking.
    groups_b: Tie-group position of every item in the second ranking.
  Returns:
    The Kendall tau distance restricted to pairs strictly ordered in both.
  """
  n = groups_a.shape[0]
  count = 0
  for i in range(n):
    for j in range(i + 1, n):
      if (groups_a[i] - groups_a[j]) * (groups_b[i] - groups_b[j]) < 0:
        count += 1
  return count
