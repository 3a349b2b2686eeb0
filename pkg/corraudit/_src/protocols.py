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

"""Train/score protocols: resubstitution, holdout, k-fold and leave-one-out.

Every protocol that shuffles rows does so with `shuffle_indices`, a SplitMix64
driven Fisher-Yates shuffle, so outcomes are reproducible from the seed alone.
"""
# pylint: disable=g-importing-member
import dataclasses
import math
from typing import List, Literal, Optional, Sequence, Tuple

from absl import logging
import numpy as np

from corraudit._src import constants
from corraudit._src import dataset as dataset_lib
from corraudit._src import error_metrics
from corraudit._src import linear_model
from corraudit._src.config import get_config
from corraudit._src.errors import ConfigError, NumericError, UsageError
from corraudit._src.typing import ZeroPolicy
from corraudit._src.utils import prng


ProtocolKind = Literal["resubstitution", "holdout", "kfold", "loo"]
_MAX_SEED = 2**64 - 1


@dataclasses.dataclass(frozen=True)
class Protocol:
  """How a model is trained and scored.

  Attributes:
    kind: One of "resubstitution", "holdout", "kfold" or "loo".
    train_fraction: Share of shuffled rows used for training (holdout only).
    k: Number of folds (kfold only).
    seed: Shuffle seed; ignored by resubstitution and loo.
  """

  kind: ProtocolKind = "resubstitution"
  train_fraction: Optional[float] = None
  k: Optional[int] = None
  seed: int = 0

  def __post_init__(self):
    if self.kind not in ("resubstitution", "holdout", "kfold", "loo"):
      raise ConfigError(f"Unknown protocol kind {self.kind!r}.")
    if not 0 <= self.seed <= _MAX_SEED:
      raise ConfigError(f"Seed {self.seed} is not a 64-bit unsigned integer.")
    if self.kind == "holdout":
      if self.train_fraction is None or not 0 < self.train_fraction < 1:
        raise ConfigError(
            "Holdout needs a train fraction strictly between 0 and 1, got "
            f"{self.train_fraction}.")
    if self.kind == "kfold" and (self.k is None or self.k < 2):
      raise ConfigError(f"k-fold needs k >= 2, got {self.k}.")

  def __str__(self) -> str:
    if self.kind == "resubstitution":
      return "insample"
    if self.kind == "holdout":
      return f"holdout:{self.train_fraction!r}"
    if self.kind == "kfold":
      return f"kfold:{self.k}"
    return "loo"


@dataclasses.dataclass(frozen=True)
class EvalOutcome:
  """Result of scoring one (x, y) pair under one protocol.

  Attributes:
    protocol: The protocol applied.
    fit_on_full: Resubstitution fit on all rows, for reporting.
    metrics: Metrics over all test predictions, pooled across folds.
    n_train: Training rows; the smallest training set for kfold/loo.
    n_test: Scored rows.
    series: Test predictions ordered by original row index.
    fold_sizes: Test rows per fold (a single entry for resubstitution and
      holdout).
  """

  protocol: Protocol
  fit_on_full: linear_model.FitResult
  metrics: error_metrics.MetricSet
  n_train: int
  n_test: int
  series: linear_model.PredictionSeries
  fold_sizes: Tuple[int, ...]


def parse_protocol(text: str, seed: Optional[int] = None) -> Protocol:
  """Parses "insample", "holdout:<fraction>", "kfold:<k>" or "loo"."""
  seed = get_config().default_seed if seed is None else seed
  kind, _, arg = text.strip().lower().partition(":")
  try:
    if kind in ("insample", "resubstitution") and not arg:
      return Protocol(kind="resubstitution", seed=seed)
    if kind == "loo" and not arg:
      return Protocol(kind="loo", seed=seed)
    if kind == "holdout":
      return Protocol(kind="holdout", train_fraction=float(arg), seed=seed)
    if kind == "kfold":
      return Protocol(kind="kfold", k=int(arg), seed=seed)
  except ValueError:
    pass
  raise UsageError(
      f"Cannot parse protocol {text!r}; expected insample, holdout:<fraction>,"
      " kfold:<k> or loo.")


def splitmix64_stream(seed: int, count: int) -> np.ndarray:
  """First `count` raw SplitMix64 outputs for `seed`."""
  return prng.splitmix64_stream(np.uint64(seed), count)


def shuffle_indices(n: int, seed: int) -> np.ndarray:
  """Deterministic permutation of 0..n-1.

  Args:
    n: Number of rows, at least 1.
    seed: 64-bit unsigned seed.
  Returns:
    An int64 permutation, identical for identical (n, seed) on every platform.
  """
  if n < 1:
    raise ConfigError(f"Cannot shuffle {n} rows.")
  if not 0 <= seed <= _MAX_SEED:
    raise ConfigError(f"Seed {seed} is not a 64-bit unsigned integer.")
  return prng.fisher_yates_permutation(n, np.uint64(seed))


def fold_assignments(n: int, k: int, seed: int = 0, shuffle: bool = True
                     ) -> List[np.ndarray]:
  """Splits rows into k folds of near-equal size.

  Folds are contiguous blocks of the (optionally shuffled) row order; the
  first n mod k folds hold one extra row. Indices inside a fold are sorted.

  Args:
    n: Number of rows.
    k: Number of folds, 2 <= k <= n.
    seed: Shuffle seed.
    shuffle: Whether to shuffle rows before cutting blocks.
  Returns:
    One sorted index array per fold.
  """
  if not 2 <= k <= n:
    raise ConfigError(f"k-fold needs 2 <= k <= n, got k={k} with n={n}.")
  order = shuffle_indices(n, seed) if shuffle else np.arange(n)
  base, extra = divmod(n, k)
  folds, start = [], 0
  for fold in range(k):
    size = base + (1 if fold < extra else 0)
    folds.append(np.sort(order[start:start + size]))
    start += size
  return folds


def _fit(xs, ys, x_label: str, y_label: str, where: str
         ) -> linear_model.FitResult:
  try:
    return linear_model.fit_ols(xs, ys, x_label=x_label, y_label=y_label)
  except NumericError as e:
    raise NumericError(f"{e} ({where})") from None


def _check_protocol(protocol: Protocol, n: int) -> None:
  if protocol.kind == "holdout":
    n_train = math.floor(protocol.train_fraction * n)
    if n_train < 2 or n - n_train < 1:
      raise ConfigError(
          f"Holdout {protocol} on {n} rows leaves {n_train} training and "
          f"{n - n_train} test rows; need at least 2 and 1.")
  if protocol.kind == "kfold" and protocol.k > n:
    raise ConfigError(f"k-fold needs k <= n, got k={protocol.k} with n={n}.")
  if protocol.kind in ("kfold", "loo") and n < 3:
    raise ConfigError(
        f"{protocol} needs at least 3 rows so every training fold has 2.")


def run_protocol(ds: dataset_lib.Dataset, y_label: str, x_label: str,
                 protocol: Protocol,
                 zero_policy: Optional[ZeroPolicy] = None,
                 metrics: Sequence[str] = constants.METRIC_NAMES
                 ) -> EvalOutcome:
  """Fits y on x and scores the predictions under `protocol`.

  Args:
    ds: Dataset holding both columns.
    y_label: Response column.
    x_label: Predictor column.
    protocol: Training/scoring protocol.
    zero_policy: MAPE zero-target policy; defaults to the configured one.
    metrics: Metrics to compute.
  Returns:
    The outcome, with test predictions pooled in original row order.
  Raises:
    DataError: for unknown columns.
    ConfigError: if the protocol cannot be applied to ds.n rows.
    NumericError: if x is constant in a training set.
  """
  xs = dataset_lib.column(ds, x_label)
  ys = dataset_lib.column(ds, y_label)
  n = ds.n
  _check_protocol(protocol, n)
  fit_on_full = _fit(xs, ys, x_label, y_label, "full data")

  if protocol.kind == "resubstitution":
    test_rows = np.arange(n)
    predicted = linear_model.predict(fit_on_full, xs)
    n_train, fold_sizes = n, (n,)
  elif protocol.kind == "holdout":
    order = shuffle_indices(n, protocol.seed)
    n_train = math.floor(protocol.train_fraction * n)
    train_rows = np.sort(order[:n_train])
    test_rows = np.sort(order[n_train:])
    fit = _fit(xs[train_rows], ys[train_rows], x_label, y_label,
               "holdout training rows")
    predicted = linear_model.predict(fit, xs[test_rows])
    fold_sizes = (int(test_rows.shape[0]),)
  else:
    k = n if protocol.kind == "loo" else protocol.k
    folds = fold_assignments(n, k, seed=protocol.seed,
                             shuffle=protocol.kind == "kfold")
    test_rows = np.arange(n)
    predicted = np.empty(n, dtype=np.float64)
    in_fold = np.zeros(n, dtype=bool)
    for i, fold in enumerate(folds):
      in_fold[:] = False
      in_fold[fold] = True
      fit = _fit(xs[~in_fold], ys[~in_fold], x_label, y_label,
                 f"training set of fold {i + 1} of {k}")
      predicted[fold] = linear_model.predict(fit, xs[fold])
      logging.debug("%s %s~%s fold %d/%d: %d test rows.", protocol, y_label,
                    x_label, i + 1, k, fold.shape[0])
    fold_sizes = tuple(int(f.shape[0]) for f in folds)
    n_train = n - max(fold_sizes)

  series = linear_model.PredictionSeries(actual=ys[test_rows],
                                         predicted=predicted)
  metric_set = error_metrics.evaluate_all(series, zero_policy, metrics)
  return EvalOutcome(protocol=protocol, fit_on_full=fit_on_full,
                     metrics=metric_set, n_train=int(n_train),
                     n_test=int(test_rows.shape[0]), series=series,
                     fold_sizes=fold_sizes)
