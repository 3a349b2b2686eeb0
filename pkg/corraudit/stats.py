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

"""Correlation and least-squares fitting of one predictor."""

from corraudit._src.stats import CorrelationResult
from corraudit._src.stats import CovarianceTerms
from corraudit._src.stats import covariance_terms
from corraudit._src.stats import mean
from corraudit._src.stats import pearson_r
from corraudit._src.stats import variance
from corraudit._src.linear_model import FitResult
from corraudit._src.linear_model import fit_ols
from corraudit._src.linear_model import predict
from corraudit._src.linear_model import residuals
from corraudit._src.linear_model import standard_error_band


__all__ = [
    "CorrelationResult",
    "CovarianceTerms",
    "covariance_terms",
    "mean",
    "pearson_r",
    "variance",
    "FitResult",
    "fit_ols",
    "predict",
    "residuals",
    "standard_error_band",
]
