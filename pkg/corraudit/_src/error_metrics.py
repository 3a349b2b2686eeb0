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

"""Error metrics of a prediction series: MAPE, MAE and RMSE.

Lower values are better for every metric.
"""
# pylint: disable=g-importing-member
import dataclasses
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from corraudit._src import constants
from corraudit._src.config import get_config
from corraudit._src.errors import ConfigError, NumericError
from corraudit._src.linear_model import PredictionSeries
from corraudit._src.typing import Vector, ZeroPolicy, typed
from corraudit._src.utils import special


@dataclasses.dataclass(frozen=True)
class MetricSet:
  """Metrics of one prediction series; unrequested metrics are None.

  Attributes:
    mape: Mean absolute percentage error, in percent.
    mae: Mean absolute error, in units of y.
    rmse: Root mean squared error (denominator n), in units of y.
    n: Number of (actual, predicted) pairs.
    n_used: Pairs entering MAPE.
    n_excluded_zero_target: Pairs dropped from MAPE because y_i = 0.
  """

  mape: Optional[float]
  mae: Optional[float]
  rmse: Optional[float]
  n: int
  n_used: int
  n_excluded_zero_target: int = 0

  def get(self, metric: str) -> Optional[float]:
    if metric not in constants.METRIC_NAMES:
      raise ConfigError(
          f"Unknown metric {metric!r}; choose from "
          f"{', '.join(constants.METRIC_NAMES)}.")
    return getattr(self, metric)


def check_metric_names(metrics: Sequence[str]) -> Tuple[str, ...]:
  unknown = [m for m in metrics if m not in constants.METRIC_NAMES]
  if unknown or not metrics:
    raise ConfigError(
        f"Unknown or missing metrics {unknown}; choose from "
        f"{', '.join(constants.METRIC_NAMES)}.")
  return tuple(dict.fromkeys(metrics))


@typed
def _absolute_errors(actual: Vector, predicted: Vector) -> Vector:
  return np.abs(actual - predicted)


def mae(series: PredictionSeries) -> float:
  """Mean absolute error, sum(|y - y_hat|) / n."""
  errors = _absolute_errors(series.actual, series.predicted)
  return special.compensated_sum(errors.tolist()) / series.n


def rmse(series: PredictionSeries) -> float:
  """Root mean squared error, sqrt(sum((y - y_hat)^2) / n)."""
  errors = _absolute_errors(series.actual, series.predicted)
  return math.sqrt(special.compensated_sum((errors * errors).tolist())
                   / series.n)


def _mape_terms(series: PredictionSeries, zero_policy: ZeroPolicy
                ) -> Tuple[float, int, int]:
  """Returns MAPE with the number of used and excluded pairs."""
  if zero_policy not in ("error", "exclude"):
    raise ConfigError(f"Unknown zero-target policy {zero_policy!r}.")
  zero = series.actual == 0.0
  if zero.any():
    if zero_policy == "error":
      raise NumericError(
          "MAPE is undefined for a zero target at row "
          f"{int(np.argmax(zero))}; use the 'exclude' zero-target policy to "
          "drop such rows.")
    if zero.all():
      raise NumericError("MAPE is undefined: every target value is zero.")
  keep = ~zero
  actual = series.actual[keep]
  ratios = _absolute_errors(actual, series.predicted[keep]) / np.abs(actual)
  n_used = int(actual.shape[0])
  value = special.compensated_sum(ratios.tolist()) / n_used * constants.PERCENT
  return value, n_used, series.n - n_used


def mape(series: PredictionSeries,
         zero_policy: Optional[ZeroPolicy] = None) -> float:
  """Mean absolute percentage error, mean(|(y - y_hat) / y|) * 100.

  Args:
    series: Actual and predicted values.
    zero_policy: "error" rejects zero targets, "exclude" drops them. Defaults
      to the configured policy.
  Returns:
    MAPE in percent.
  Raises:
    NumericError: for a zero target under "error", or all-zero targets.
  """
  zero_policy = zero_policy or get_config().zero_policy
  return _mape_terms(series, zero_policy)[0]


def evaluate_all(series: PredictionSeries,
                 zero_policy: Optional[ZeroPolicy] = None,
                 metrics: Sequence[str] = constants.METRIC_NAMES
                 ) -> MetricSet:
  """Computes the requested metrics of one series."""
  metrics = check_metric_names(metrics)
  zero_policy = zero_policy or get_config().zero_policy
  values = {}
  n_used, n_excluded = series.n, 0
  if "mape" in metrics:
    values["mape"], n_used, n_excluded = _mape_terms(series, zero_policy)
  if "mae" in metrics:
    values["mae"] = mae(series)
  if "rmse" in metrics:
    values["rmse"] = rmse(series)
  return MetricSet(mape=values.get("mape"), mae=values.get("mae"),
                   rmse=values.get("rmse"), n=series.n, n_used=n_used,
                   n_excluded_zero_target=n_excluded)
