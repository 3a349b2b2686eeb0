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

"""Generally useful small numeric functions."""
import math
from typing import Iterable, Optional

import numpy as np

from corraudit._src import constants
from corraudit._src.typing import Vector, typed


############################################################################
####  Summation.
############################################################################


def compensated_sum(values: Iterable[float]) -> float:
  """Correctly rounded sum of floats, independent of summation order."""
  return math.fsum(values)


@typed
def compensated_mean(xs: Vector) -> float:
  return compensated_sum(xs.tolist()) / xs.shape[0]


@typed
def centered_sum_of_products(xs: Vector, x_mean: float,
                             ys: Vector, y_mean: float) -> float:
  """Computes sum((x_i - x_mean) * (y_i - y_mean)) with compensation."""
  return compensated_sum(((xs - x_mean) * (ys - y_mean)).tolist())


############################################################################
####  Range helpers.
############################################################################


def clamp_correlation(r: float) -> float:
  bound = constants.CORRELATION_CLAMP
  return min(max(r, -bound), bound)


def values_tied(a: float, b: float, tolerance: float) -> bool:
  """Ties at an absolute tolerance, scaled up for values larger than one."""
  return abs(a - b) <= tolerance * max(1.0, abs(a), abs(b))


############################################################################
####  Rendering.
############################################################################


def shortest_repr(x: Optional[float]) -> str:
  """Shortest decimal text that parses back to the same float."""
  if x is None:
    return ""
  return repr(float(x))


def format_significant(x: Optional[float], digits: int) -> str:
  if x is None:
    return "n/a"
  return f"{float(x):.{digits}g}"


def format_fixed(x: Optional[float], decimals: int) -> str:
  if x is None:
    return "n/a"
  text = f"{float(x):.{decimals}f}"
  # Avoid printing "-0.00" for tiny negative values.
  if float(text) == 0.0:
    text = f"{0.0:.{decimals}f}"
  return text


def as_float_vector(values) -> np.ndarray:
  """Converts array-likes into a contiguous 1-D float64 array."""
  return np.ascontiguousarray(np.asarray(values, dtype=np.float64).reshape(-1))
