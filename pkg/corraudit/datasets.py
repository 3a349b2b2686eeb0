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

"""Datasets: CSV ingestion, summaries and the embedded reference data."""

from corraudit._src.dataset import Dataset
from corraudit._src.dataset import ColumnStats
from corraudit._src.dataset import column
from corraudit._src.dataset import export_csv
from corraudit._src.dataset import from_columns
from corraudit._src.dataset import load_csv
from corraudit._src.dataset import summarize
from corraudit._src.dataset import summarize_all
from corraudit._src.reference_data import available_datasets
from corraudit._src.reference_data import embedded_payload
from corraudit._src.reference_data import load_embedded


__all__ = [
    "Dataset",
    "ColumnStats",
    "column",
    "export_csv",
    "from_columns",
    "load_csv",
    "summarize",
    "summarize_all",
    "available_datasets",
    "embedded_payload",
    "load_embedded",
]
