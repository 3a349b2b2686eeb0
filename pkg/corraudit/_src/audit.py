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

"""Audits correlation-based predictor selection against error metrics.

Candidate predictors are ranked by |r| (descending) and, under every protocol,
by each error metric (ascending). A disagreement is recorded whenever some pair
of predictors is ordered one way by |r| and the other way by the metric.
"""
# pylint: disable=g-importing-member
import dataclasses
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from absl import logging
import numpy as np

from corraudit._src import constants
from corraudit._src import dataset as dataset_lib
from corraudit._src import error_metrics
from corraudit._src import linear_model
from corraudit._src import protocols as protocols_lib
from corraudit._src import stats
from corraudit._src.config import get_config
from corraudit._src.errors import ConfigError, CorrAuditError, InternalError
from corraudit._src.typing import ZeroPolicy
from corraudit._src.utils import ranking as ranking_lib
from corraudit._src.utils import special


CellKey = Tuple[str, str]  # (predictor, protocol text)


@dataclasses.dataclass(frozen=True)
class AuditSpec:
  """Which predictors of which target are audited, and how."""

  y_label: str
  x_labels: Tuple[str, ...]
  protocols: Tuple[protocols_lib.Protocol, ...] = (
      protocols_lib.Protocol(kind="resubstitution"),)
  metrics: Tuple[str, ...] = constants.METRIC_NAMES
  zero_policy: Optional[ZeroPolicy] = None

  def __post_init__(self):
    object.__setattr__(self, "x_labels", tuple(self.x_labels))
    object.__setattr__(self, "protocols", tuple(self.protocols))
    object.__setattr__(self, "metrics",
                       error_metrics.check_metric_names(tuple(self.metrics)))
    if len(self.x_labels) < 2:
      raise ConfigError("An audit needs at least two candidate predictors.")
    if len(set(self.x_labels)) != len(self.x_labels):
      raise ConfigError(f"Predictors must be distinct: {self.x_labels}.")
    if self.y_label in self.x_labels:
      raise ConfigError(
          f"Target {self.y_label!r} cannot also be a candidate predictor.")
    if not self.protocols:
      raise ConfigError("An audit needs at least one protocol.")
    names = [str(p) for p in self.protocols]
    if len(set(names)) != len(names):
      raise ConfigError(f"Protocols must be distinct: {names}.")


@dataclasses.dataclass(frozen=True)
class Ranking:
  """Predictors in rank order (best first) with their scores.

  Attributes:
    order: Predictor labels, best first; ties ordered by label.
    values: Score of each predictor in `order` (|r| or a metric value).
    tie_groups: Consecutive groups of predictors whose scores tie.
  """

  order: Tuple[str, ...]
  values: Tuple[float, ...]
  tie_groups: Tuple[Tuple[str, ...], ...]

  @property
  def ties(self) -> Tuple[Tuple[str, ...], ...]:
    return tuple(g for g in self.tie_groups if len(g) > 1)

  def group_positions(self, labels: Sequence[str]) -> np.ndarray:
    position = {label: i for i, group in enumerate(self.tie_groups)
                for label in group}
    return np.array([position[label] for label in labels], dtype=np.int64)


@dataclasses.dataclass(frozen=True)
class Disagreement:
  protocol: str
  metric: str
  correlation_ranking: Tuple[str, ...]
  metric_ranking: Tuple[str, ...]
  kendall_tau_distance: int


@dataclasses.dataclass(frozen=True)
class AuditReport:
  """Everything an audit computed, ordered independently of evaluation order.

  Attributes:
    dataset: Name of the audited dataset.
    spec: The audit specification.
    correlations: Correlation of each predictor with the target.
    fits: Full-data least-squares fit of each predictor.
    evaluations: Metrics per (predictor, protocol text).
    correlation_ranking: Predictors by |r|, descending.
    metric_rankings: Predictors by metric, ascending, per (protocol, metric).
    kendall_tau_distances: Discordant pairs between correlation_ranking and
      each metric ranking, per (protocol, metric).
    disagreements: Entries for every (protocol, metric) whose ranking is
      discordant with correlation_ranking.
  """

  dataset: str
  spec: AuditSpec
  correlations: Dict[str, stats.CorrelationResult]
  fits: Dict[str, linear_model.FitResult]
  evaluations: Dict[CellKey, protocols_lib.EvalOutcome]
  correlation_ranking: Ranking
  metric_rankings: Dict[Tuple[str, str], Ranking]
  kendall_tau_distances: Dict[Tuple[str, str], int]
  disagreements: Tuple[Disagreement, ...]

  @property
  def has_disagreement(self) -> bool:
    return bool(self.disagreements)


def _rank(scores: Mapping[str, float], descending: bool,
          tolerance: float) -> Ranking:
  """Sorts predictors by score, grouping scores that tie at `tolerance`."""
  sign = -1.0 if descending else 1.0
  by_score = sorted(scores.items(), key=lambda kv: (sign * kv[1], kv[0]))
  groups: List[List[str]] = []
  previous = None
  for label, score in by_score:
    if previous is not None and special.values_tied(previous, score,
                                                    tolerance):
      groups[-1].append(label)
    else:
      groups.append([label])
    previous = score
  groups = [sorted(g) for g in groups]
  order = tuple(label for g in groups for label in g)
  return Ranking(order=order, values=tuple(scores[x] for x in order),
                 tie_groups=tuple(tuple(g) for g in groups))


def kendall_tau_distance(ranking_a: Ranking, ranking_b: Ranking) -> int:
  """Pairs ordered strictly one way in `ranking_a` and the other in `b`."""
  if sorted(ranking_a.order) != sorted(ranking_b.order):
    raise InternalError("Rankings compare different predictor sets.")
  labels = sorted(ranking_a.order)
  return int(ranking_lib.count_discordant_pairs(
      ranking_a.group_positions(labels), ranking_b.group_positions(labels)))


def _correlations(ds: dataset_lib.Dataset, spec: AuditSpec
                  ) -> Dict[str, stats.CorrelationResult]:
  ys = dataset_lib.column(ds, spec.y_label)
  out = {}
  for x_label in spec.x_labels:
    try:
      out[x_label] = stats.pearson_r(dataset_lib.column(ds, x_label), ys,
                                     x_label=x_label, y_label=spec.y_label)
    except CorrAuditError as e:
      raise type(e)(f"Predictor {x_label!r}: {e}") from None
  return out


def rank_by_correlation(ds: dataset_lib.Dataset, spec: AuditSpec,
                        tolerance: Optional[float] = None) -> Ranking:
  """Ranks predictors by |r| with the target, strongest first.

  Args:
    ds: Dataset holding the target and predictors.
    spec: Audit spec naming them.
    tolerance: Absolute |r| difference treated as a tie; defaults to the
      configured tie tolerance.
  Returns:
    The ranking, with |r| as scores.
  """
  tolerance = get_config().tie_tolerance if tolerance is None else tolerance
  correlations = _correlations(ds, spec)
  return _rank({x: abs(c.r) for x, c in correlations.items()},
               descending=True, tolerance=tolerance)


def rank_by_metric(evaluations: Mapping[CellKey, error_metrics.MetricSet],
                   protocol: str, metric: str, predictors: Sequence[str],
                   tolerance: Optional[float] = None) -> Ranking:
  """Ranks predictors by one metric under one protocol, lowest first."""
  tolerance = get_config().tie_tolerance if tolerance is None else tolerance
  scores = {}
  for predictor in predictors:
    cell = evaluations.get((predictor, str(protocol)))
    value = None if cell is None else cell.get(metric)
    if value is None:
      raise InternalError(
          f"Missing {metric} for predictor {predictor!r} under {protocol}.")
    scores[predictor] = value
  return _rank(scores, descending=False, tolerance=tolerance)


def compile_audit(ds: dataset_lib.Dataset, spec: AuditSpec) -> AuditReport:
  """Runs every (predictor, protocol) evaluation and compares rankings.

  A (protocol, metric) pair disagrees when some two predictors are strictly
  ordered one way by |r| and the other way by the metric. A pair tied in
  either ranking never disagrees, so a tie on one side against a strict
  order on the other is not reported.

  Args:
    ds: Dataset holding the target and predictors.
    spec: What to audit.
  Returns:
    The complete report. Output is deterministic for fixed inputs and seeds.
  Raises:
    DataError, NumericError, ConfigError: naming the failing predictor.
  """
  tolerance = get_config().tie_tolerance
  correlations = _correlations(ds, spec)
  correlation_ranking = _rank(
      {x: abs(c.r) for x, c in correlations.items()}, descending=True,
      tolerance=tolerance)

  evaluations = {}
  for x_label in sorted(spec.x_labels):
    for protocol in sorted(spec.protocols, key=str):
      try:
        evaluations[(x_label, str(protocol))] = protocols_lib.run_protocol(
            ds, spec.y_label, x_label, protocol,
            zero_policy=spec.zero_policy, metrics=spec.metrics)
      except CorrAuditError as e:
        raise type(e)(f"Predictor {x_label!r} under {protocol}: {e}"
                      ) from None
  fits = {x: evaluations[(x, str(spec.protocols[0]))].fit_on_full
          for x in spec.x_labels}
  metric_sets = {key: outcome.metrics for key, outcome in evaluations.items()}

  metric_rankings, distances, disagreements = {}, {}, []
  for protocol in spec.protocols:
    for metric in spec.metrics:
      key = (str(protocol), metric)
      metric_rankings[key] = rank_by_metric(
          metric_sets, str(protocol), metric, spec.x_labels, tolerance)
      distances[key] = kendall_tau_distance(correlation_ranking,
                                            metric_rankings[key])
      if distances[key] > 0:
        disagreements.append(Disagreement(
            protocol=str(protocol), metric=metric,
            correlation_ranking=correlation_ranking.order,
            metric_ranking=metric_rankings[key].order,
            kendall_tau_distance=distances[key]))
  logging.info("Audit of %r on %s: %d disagreement(s) over %d comparisons.",
               spec.y_label, ds.name, len(disagreements), len(distances))
  return AuditReport(dataset=ds.name, spec=spec, correlations=correlations,
                     fits=fits, evaluations=evaluations,
                     correlation_ranking=correlation_ranking,
                     metric_rankings=metric_rankings,
                     kendall_tau_distances=distances,
                     disagreements=tuple(disagreements))


def _metric_payload(outcome: protocols_lib.EvalOutcome) -> Dict[str, object]:
  m = outcome.metrics
  return {"mape": m.mape, "mae": m.mae, "rmse": m.rmse, "n": m.n,
          "n_used": m.n_used,
          "n_excluded_zero_target": m.n_excluded_zero_target,
          "n_train": outcome.n_train, "n_test": outcome.n_test}


def _ranking_payload(ranking: Ranking) -> Dict[str, object]:
  return {"order": list(ranking.order), "values": list(ranking.values),
          "ties": [list(g) for g in ranking.ties]}


def report_to_dict(report: AuditReport, version: str,
                   seed: int) -> Dict[str, object]:
  """JSON-ready form of a report; see data/report_schema.json."""
  spec = report.spec
  evaluations: Dict[str, Dict[str, object]] = {}
  rankings: Dict[str, Dict[str, object]] = {}
  distances: Dict[str, Dict[str, int]] = {}
  for protocol in spec.protocols:
    name = str(protocol)
    evaluations[name] = {x: _metric_payload(report.evaluations[(x, name)])
                         for x in spec.x_labels}
    rankings[name] = {m: _ranking_payload(report.metric_rankings[(name, m)])
                      for m in spec.metrics}
    distances[name] = {m: report.kendall_tau_distances[(name, m)]
                       for m in spec.metrics}
  return {
      "tool": "corraudit",
      "version": version,
      "dataset": report.dataset,
      "target": spec.y_label,
      "seed": seed,
      "zero_policy": spec.zero_policy or get_config().zero_policy,
      "protocols": [str(p) for p in spec.protocols],
      "metrics": list(spec.metrics),
      "predictors": {
          x: {"r": report.correlations[x].r,
              "alpha": report.fits[x].alpha,
              "beta": report.fits[x].beta,
              "n": report.fits[x].n,
              "residual_std_error": report.fits[x].residual_std_error}
          for x in spec.x_labels},
      "evaluations": evaluations,
      "rankings": {"correlation": _ranking_payload(report.correlation_ranking),
                   "metrics": rankings},
      "kendall_tau_distances": distances,
      "disagreements": [
          {"protocol": d.protocol, "metric": d.metric,
           "correlation_ranking": list(d.correlation_ranking),
           "metric_ranking": list(d.metric_ranking),
           "kendall_tau_distance": d.kendall_tau_distance}
          for d in report.disagreements],
  }
