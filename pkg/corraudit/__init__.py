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

"""CorrAudit audits Pearson's correlation as a predictor selector."""
# pylint: disable=g-multiple-import, g-importing-member
from corraudit import datasets
from corraudit import metrics
from corraudit import protocols
from corraudit import special
from corraudit import stats
from corraudit._src.audit import AuditReport, AuditSpec, Disagreement, Ranking
from corraudit._src.audit import compile_audit, kendall_tau_distance, rank_by_correlation, rank_by_metric, report_to_dict
from corraudit._src.config import get_config, set_config, config_context
from corraudit._src.dataset import ColumnStats, Dataset
from corraudit._src.dataset import column, export_csv, from_columns, load_csv, summarize, summarize_all
from corraudit._src.error_metrics import MetricSet, evaluate_all, mae, mape, rmse
from corraudit._src.errors import ConfigError, CorrAuditError, DataError, InternalError, NumericError, UsageError
from corraudit._src.linear_model import FitResult, PredictionSeries
from corraudit._src.linear_model import fit_ols, predict, prediction_series, residuals, standard_error_band
from corraudit._src.plotting import PlotSpec, render_plot
from corraudit._src.protocols import EvalOutcome, Protocol
from corraudit._src.protocols import fold_assignments, parse_protocol, run_protocol, shuffle_indices, splitmix64_stream
from corraudit._src.reference_data import available_datasets, embedded_payload, load_embedded, study_case
from corraudit._src.stats import CorrelationResult, CovarianceTerms
from corraudit._src.stats import covariance_terms, mean, pearson_r, variance


__version__ = "2026.10.19"


__all__ = (
    "Dataset",
    "ColumnStats",
    "from_columns",
    "load_csv",
    "export_csv",
    "column",
    "summarize",
    "summarize_all",
    "CorrelationResult",
    "CovarianceTerms",
    "mean",
    "variance",
    "covariance_terms",
    "pearson_r",
    "FitResult",
    "PredictionSeries",
    "fit_ols",
    "predict",
    "residuals",
    "prediction_series",
    "standard_error_band",
    "MetricSet",
    "mape",
    "mae",
    "rmse",
    "evaluate_all",
    "Protocol",
    "EvalOutcome",
    "parse_protocol",
    "run_protocol",
    "shuffle_indices",
    "splitmix64_stream",
    "fold_assignments",
    "AuditSpec",
    "AuditReport",
    "Ranking",
    "Disagreement",
    "compile_audit",
    "rank_by_correlation",
    "rank_by_metric",
    "kendall_tau_distance",
    "report_to_dict",
    "available_datasets",
    "embedded_payload",
    "load_embedded",
    "study_case",
    "PlotSpec",
    "render_plot",
    "CorrAuditError",
    "UsageError",
    "ConfigError",
    "DataError",
    "NumericError",
    "InternalError",
    "get_config",
    "set_config",
    "config_context",
    "datasets",
    "metrics",
    "protocols",
    "special",
    "stats",
)


# Symbols in `_src` are not part of the public API.
