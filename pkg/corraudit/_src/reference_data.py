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

"""Embedded copies of the mtcars and iris datasets.

Both payloads are the canonical distributions shipped with R (iris in the
corrected form that matches Fisher's published table), stored as CSV and
verified against a SHA-256 checksum whenever they are read.
"""
# pylint: disable=g-importing-member
import dataclasses
import hashlib
import os
from typing import Tuple

from corraudit._src import audit
from corraudit._src import dataset as dataset_lib
from corraudit._src import protocols
from corraudit._src.errors import DataError


_DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


@dataclasses.dataclass(frozen=True)
class EmbeddedDataset:
  name: str
  filename: str
  sha256: str
  n: int
  numeric_labels: Tuple[str, ...]


EMBEDDED = {
    "mtcars": EmbeddedDataset(
        name="mtcars",
        filename="mtcars.csv",
        sha256=(
            "ccdee0344a4a7869044aa4fbb7bb4b8e9c1eda4f6ef805cdedd4e6ac8e963b66"),
        n=32,
        numeric_labels=("mpg", "cyl", "disp", "hp", "drat", "wt", "qsec",
                        "vs", "am", "gear", "carb")),
    "iris": EmbeddedDataset(
        name="iris",
        filename="iris.csv",
        sha256=(
            "9cc1c345c71bcc9b486b74cbf6063fa66f4bb5e0f603a4b3c3471ec2e5e8e355"),
        n=150,
        numeric_labels=("sepal_length", "sepal_width", "petal_length",
                        "petal_width")),
}


def available_datasets() -> Tuple[str, ...]:
  return tuple(sorted(EMBEDDED))


def _lookup(name: str) -> EmbeddedDataset:
  try:
    return EMBEDDED[name]
  except KeyError:
    raise DataError(
        f"Unknown embedded dataset {name!r}; available: "
        f"{', '.join(available_datasets())}.") from None


def embedded_payload(name: str) -> bytes:
  """Raw CSV bytes of an embedded dataset, checksum verified."""
  entry = _lookup(name)
  with open(os.path.join(_DATA_DIR, entry.filename), "rb") as f:
    payload = f.read()
  digest = hashlib.sha256(payload).hexdigest()
  if digest != entry.sha256:
    raise DataError(
        f"Embedded dataset {name!r} is corrupted: sha256 {digest} does not "
        f"match {entry.sha256}.")
  return payload


def load_embedded(name: str) -> dataset_lib.Dataset:
  """Loads an embedded dataset; text columns (model, species) are skipped."""
  entry = _lookup(name)
  ds = dataset_lib.load_csv(embedded_payload(name), name,
                            skip_non_numeric=True)
  if ds.n != entry.n or ds.labels != entry.numeric_labels:
    raise DataError(f"Embedded dataset {name!r} does not have the expected "
                    f"{entry.n} rows and columns {entry.numeric_labels}.")
  return ds


# The two study cases: one response and two candidate predictors each.
_STUDY_CASES = {
    "mtcars": ("mpg", ("disp", "hp")),
    "iris": ("petal_length", ("sepal_length", "petal_width")),
}


def study_case(name: str, seed: int = 0) -> audit.AuditSpec:
  """Audit spec of a study case under resubstitution and leave-one-out."""
  _lookup(name)
  y_label, x_labels = _STUDY_CASES[name]
  return audit.AuditSpec(
      y_label=y_label, x_labels=x_labels,
      protocols=(protocols.Protocol(kind="resubstitution", seed=seed),
                 protocols.Protocol(kind="loo", seed=seed)))
