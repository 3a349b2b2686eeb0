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

"""Closed-form ordinary least squares with a single predictor."""
# pylint: disable=g-importing-member
import dataclasses
import math
from typing import Optional

import numpy as np

from corraudit._src import stats
from corraudit._src.errors import DataError, NumericError
from corraudit._src.typing import Vector, typed
from corraudit._src.utils import special


@dataclasses.dataclass(frozen=True)
class FitResult:
  """Line y = alpha + beta * x fitted by least squares.

  Attributes:
    alpha: Intercept, in units of y.
    beta: Slope, in units of y per unit of x.
    r: Pearson's r of the fitting data; None when y is constant.
    n: Number of fitting rows.
    x_label: Predictor name.
    y_label: Response name.
    residual_std_error: sqrt(sum(e^2) / (n - 2)); None for n < 3.
    x_mean: Mean of the fitting predictor values.
    y_mean: Mean of the fitting response values.
    sxx: Centered sum of squares of the predictor.
  """

  alpha: float
  beta: float
  r: Optional[float]
  n: int
  x_label: str = "x"
  y_label: str = "y"
  residual_std_error: Optional[float] = None
  x_mean: float = 0.0
  y_mean: float = 0.0
  sxx: float = 1.0


@dataclasses.dataclass(frozen=True, eq=False)
class PredictionSeries:
  """Observed responses next to the predictions made for them."""

  actual: np.ndarray
  predicted: np.ndarray

  def __post_init__(self):
    actual = special.as_float_vector(self.actual)
    predicted = special.as_float_vector(self.predicted)
    if actual.shape[0] != predicted.shape[0]:
      raise DataError(
          f"Prediction series lengths differ: {actual.shape[0]} actual vs "
          f"{predicted.shape[0]} predicted values.")
    if actual.shape[0] < 1:
      raise DataError("Prediction series is empty.")
    object.__setattr__(self, "actual", actual)
    object.__setattr__(self, "predicted", predicted)

  @property
  def n(self) -> int:
    return int(self.actual.shape[0])

  def __eq__(self, other) -> bool:
    if not isinstance(other, PredictionSeries):
      return NotImplemented
    return (np.array_equal(self.actual, other.actual)
            and np.array_equal(self.predicted, other.predicted))

  __hash__ = None


@typed
def _predict(alpha: float, beta: float, xs: Vector) -> Vector:
  return alpha + beta * xs


def fit_ols(xs, ys, x_label: str = "x", y_label: str = "y") -> FitResult:
  """Fits y = alpha + beta * x by ordinary least squares.

  beta = sxy / sxx and alpha = y_mean - beta * x_mean, which makes the line
  pass through the centroid and the residuals sum to zero.

  Args:
    xs: Predictor values.
    ys: Response values, same length as `xs`.
    x_label: Predictor name.
    y_label: Response name.
  Returns:
    The fitted line with its correlation and residual standard error.
  Raises:
    DataError: on length mismatch or fewer than two rows.
    NumericError: if the predictor is constant.
  """
  xs = special.as_float_vector(xs)
  ys = special.as_float_vector(ys)
  terms = stats.covariance_terms(xs, ys)
  if terms.sxx <= 0:
    raise NumericError(
        f"Cannot fit {y_label!r} on constant predictor {x_label!r}.")
  x_mean = stats.mean(xs)
  y_mean = stats.mean(ys)
  beta = terms.sxy / terms.sxx
  alpha = y_mean - beta * x_mean
  r = stats.correlation_from_terms(terms) if terms.syy > 0 else None
  n = int(xs.shape[0])
  residual_std_error = None
  if n >= 3:
    errors = ys - _predict(alpha, beta, xs)
    residual_std_error = math.sqrt(
        special.compensated_sum((errors * errors).tolist()) / (n - 2))
  return FitResult(alpha=alpha, beta=beta, r=r, n=n, x_label=x_label,
                   y_label=y_label, residual_std_error=residual_std_error,
                   x_mean=x_mean, y_mean=y_mean, sxx=terms.sxx)


def predict(fit: FitResult, xs) -> np.ndarray:
  """Evaluates alpha + beta * x elementwise."""
  return _predict(float(fit.alpha), float(fit.beta),
                  special.as_float_vector(xs))


def residuals(fit: FitResult, xs, ys) -> np.ndarray:
  """Residuals y - y_hat of a fitted line."""
  xs = special.as_float_vector(xs)
  ys = special.as_float_vector(ys)
  if xs.shape[0] != ys.shape[0]:
    raise DataError(
        f"Length mismatch: x has {xs.shape[0]} values, y has {ys.shape[0]}.")
  return ys - predict(fit, xs)


def prediction_series(fit: FitResult, xs, ys) -> PredictionSeries:
  return PredictionSeries(actual=ys, predicted=predict(fit, xs))


def standard_error_band(fit: FitResult, xs) -> np.ndarray:
  """Pointwise half-widths s * sqrt(1/n + (x - x_mean)^2 / sxx) of the fit."""
  if fit.residual_std_error is None:
    raise NumericError(
        f"Standard error band needs at least 3 fitting rows, got {fit.n}.")
  xs = special.as_float_vector(xs)
  return fit.residual_std_error * np.sqrt(
      1.0 / fit.n + np.square(xs - fit.x_mean) / fit.sxx)
