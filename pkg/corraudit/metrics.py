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

"""Error metrics of predictions: MAPE, MAE and RMSE."""

from corraudit._src.error_metrics import MetricSet
from corraudit._src.error_metrics import evaluate_all
from corraudit._src.error_metrics import mae
from corraudit._src.error_metrics import mape
from corraudit._src.error_metrics import rmse
from corraudit._src.linear_model import PredictionSeries


__all__ = [
    "MetricSet",
    "evaluate_all",
    "mae",
    "mape",
    "rmse",
    "PredictionSeries",
]
