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

"""Means, variances, covariance terms and Pearson's correlation."""
# pylint: disable=g-importing-member
import dataclasses
import math
from typing import NamedTuple

from corraudit._src.errors import DataError, NumericError
from corraudit._src.typing import Vector, typed
from corraudit._src.utils import special


class CovarianceTerms(NamedTuple):
  """Centered sums forming the numerator and denominator of Pearson's r."""

  sxy: float
  sxx: float
  syy: float


@dataclasses.dataclass(frozen=True)
class CorrelationResult:
  """Product-moment correlation of one (x, y) pair."""

  r: float
  n: int
  x_label: str = "x"
  y_label: str = "y"


def _paired_vectors(xs, ys, minimum: int):
  xs = special.as_float_vector(xs)
  ys = special.as_float_vector(ys)
  if xs.shape[0] != ys.shape[0]:
    raise DataError(
        f"Length mismatch: x has {xs.shape[0]} values, y has {ys.shape[0]}.")
  if xs.shape[0] < minimum:
    raise DataError(
        f"At least {minimum} paired values are needed, got {xs.shape[0]}.")
  return xs, ys


def mean(xs) -> float:
  """Arithmetic mean with compensated summation."""
  xs = special.as_float_vector(xs)
  if xs.shape[0] == 0:
    raise NumericError("Mean of an empty sequence is undefined.")
  return special.compensated_mean(xs)


def variance(xs, ddof: int = 0) -> float:
  """Two-pass variance; ddof=0 gives the population, ddof=1 the sample one."""
  xs = special.as_float_vector(xs)
  if xs.shape[0] <= ddof or xs.shape[0] == 0:
    raise NumericError(
        f"Variance with ddof={ddof} needs more than {ddof} values, "
        f"got {xs.shape[0]}.")
  return _centered_square_sum(xs) / (xs.shape[0] - ddof)


@typed
def _centered_square_sum(xs: Vector) -> float:
  x_mean = special.compensated_mean(xs)
  return special.centered_sum_of_products(xs, x_mean, xs, x_mean)


@typed
def _covariance_terms(xs: Vector, ys: Vector) -> CovarianceTerms:
  x_mean = special.compensated_mean(xs)
  y_mean = special.compensated_mean(ys)
  return CovarianceTerms(
      sxy=special.centered_sum_of_products(xs, x_mean, ys, y_mean),
      sxx=special.centered_sum_of_products(xs, x_mean, xs, x_mean),
      syy=special.centered_sum_of_products(ys, y_mean, ys, y_mean))


def covariance_terms(xs, ys) -> CovarianceTerms:
  """Centered sums sxy, sxx and syy over paired values.

  Args:
    xs: Values of the first variable.
    ys: Values of the second variable, same length as `xs`.
  Returns:
    sxy = sum((x - x_mean) * (y - y_mean)), sxx = sum((x - x_mean)^2) and
    syy = sum((y - y_mean)^2).
  Raises:
    DataError: if the lengths differ or fewer than two pairs are given.
  """
  xs, ys = _paired_vectors(xs, ys, minimum=2)
  return _covariance_terms(xs, ys)


def correlation_from_terms(terms: CovarianceTerms) -> float:
  if terms.sxx <= 0 or terms.syy <= 0:
    raise NumericError("correlation undefined for constant variable")
  # Even power-of-two rescaling is exact: the quotient equals
  # sxy / sqrt(sxx * syy) bit for bit wherever that product is a normal float.
  ex = math.frexp(terms.sxx)[1] & ~1
  ey = math.frexp(terms.syy)[1] & ~1
  sxy = math.ldexp(terms.sxy, -((ex + ey) // 2))
  return special.clamp_correlation(
      sxy / math.sqrt(math.ldexp(terms.sxx, -ex) * math.ldexp(terms.syy, -ey)))


def pearson_r(xs, ys, x_label: str = "x", y_label: str = "y"
              ) -> CorrelationResult:
  """Pearson's product-moment correlation coefficient.

  The centered-sum formula is evaluated with compensated sums and the result
  is clamped into [-1, 1] to absorb rounding on collinear data.

  Args:
    xs: Values of the predictor.
    ys: Values of the response, same length as `xs`.
    x_label: Name reported for the predictor.
    y_label: Name reported for the response.
  Returns:
    The correlation together with the sample size and labels.
  Raises:
    DataError: on length mismatch or fewer than two pairs.
    NumericError: if either variable is constant.
  """
  xs, ys = _paired_vectors(xs, ys, minimum=2)
  terms = _covariance_terms(xs, ys)
  try:
    r = correlation_from_terms(terms)
  except NumericError as e:
    constant = x_label if terms.sxx <= 0 else y_label
    raise NumericError(f"{e} ({constant!r})") from None
  return CorrelationResult(r=r, n=int(xs.shape[0]),
                           x_label=x_label, y_label=y_label)
