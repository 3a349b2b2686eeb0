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

"""Rectangular numeric datasets: CSV ingestion, validation and summaries."""
# pylint: disable=g-importing-member
from __future__ import annotations

import csv
import dataclasses
import difflib
import io
import re
from typing import (BinaryIO, Iterable, List, Mapping, Optional, Sequence,
                    Tuple, Union)

from absl import logging
import numpy as np
import pandas as pd

from corraudit._src import stats
from corraudit._src.errors import DataError
from corraudit._src.utils import special


CsvSource = Union[bytes, bytearray, BinaryIO]
_PARSER_LINE = re.compile(r"line (\d+)")


@dataclasses.dataclass(frozen=True, eq=False)
class Dataset:
  """Immutable column-major table of finite float64 values.

  Attributes:
    name: Short identifier used in reports and diagnostics.
    labels: Column labels in header order, unique and non-empty.
    values: Read-only array of shape (number of columns, n).
    skipped_labels: Labels of non-numeric columns dropped at ingestion.
  """

  name: str
  labels: Tuple[str, ...]
  values: np.ndarray
  skipped_labels: Tuple[str, ...] = ()

  def __post_init__(self):
    if not self.labels:
      raise DataError(f"Dataset {self.name!r} has no numeric columns.")
    for label in self.labels:
      if not label.strip():
        raise DataError(f"Dataset {self.name!r} has an empty column label.")
    duplicates = sorted({x for x in self.labels if self.labels.count(x) > 1})
    if duplicates:
      raise DataError(
          f"Dataset {self.name!r} has duplicate column labels: {duplicates}.")
    if self.values.ndim != 2 or self.values.shape[0] != len(self.labels):
      raise DataError(
          f"Dataset {self.name!r} needs one value row per column label.")
    if self.values.shape[1] < 1:
      raise DataError(f"Dataset {self.name!r} has no data rows.")
    finite = np.isfinite(self.values)
    if not finite.all():
      col, row = (int(i[0]) for i in np.nonzero(~finite))
      raise DataError(
          f"Dataset {self.name!r} has a non-finite value at row {row + 1}, "
          f"column {self.labels[col]!r}.")

  @property
  def n(self) -> int:
    return int(self.values.shape[1])

  @property
  def columns(self) -> Tuple[Tuple[str, np.ndarray], ...]:
    return tuple(zip(self.labels, self.values))

  def __eq__(self, other) -> bool:
    """Bit-exact equality of name, labels and every cell."""
    if not isinstance(other, Dataset):
      return NotImplemented
    return (self.name == other.name and self.labels == other.labels
            and self.values.shape == other.values.shape
            and bool(np.array_equal(self.values.view(np.uint64),
                                    other.values.view(np.uint64))))

  __hash__ = None


@dataclasses.dataclass(frozen=True)
class ColumnStats:
  """Summary statistics of one column; variances are absent for n < 2."""

  label: str
  n: int
  min: float
  mean: float
  max: float
  variance_pop: Optional[float]
  variance_sample: Optional[float]


def from_columns(name: str,
                 columns: Union[Mapping[str, Sequence[float]],
                                Iterable[Tuple[str, Sequence[float]]]],
                 skipped_labels: Sequence[str] = ()) -> Dataset:
  """Builds a validated Dataset from (label, values) pairs."""
  pairs = list(columns.items() if isinstance(columns, Mapping) else columns)
  labels = tuple(str(label) for label, _ in pairs)
  vectors = [special.as_float_vector(values) for _, values in pairs]
  lengths = sorted({v.shape[0] for v in vectors})
  if len(lengths) > 1:
    raise DataError(
        f"Dataset {name!r} has columns of different lengths: {lengths}.")
  if vectors:
    values = np.vstack(vectors)
  else:
    values = np.empty((0, 0), dtype=np.float64)
  values.setflags(write=False)
  return Dataset(name=name, labels=labels, values=values,
                 skipped_labels=tuple(skipped_labels))


def _check_field_counts(raw: bytes, name: str):
  """Raises on the first data row whose field count differs from the header.

  The tokenizer pads short rows with empty cells, so the count is taken from
  the raw records.
  """
  try:
    text = raw.decode("utf-8-sig")
  except UnicodeDecodeError as e:
    raise DataError(f"Dataset {name!r}: input is not UTF-8: {e}") from None
  try:
    records = [r for r in csv.reader(io.StringIO(text, newline="")) if r]
  except csv.Error as e:
    raise DataError(f"Dataset {name!r}: malformed CSV: {e}") from None
  if not records:
    raise DataError(f"Dataset {name!r}: empty CSV input.")
  header = records[0]
  for row, record in enumerate(records[1:], start=1):
    if len(record) != len(header):
      raise DataError(
          f"Dataset {name!r}: ragged CSV at row {row}: expected "
          f"{len(header)} fields, found {len(record)}.")


def _read_cells(raw: bytes, name: str) -> pd.DataFrame:
  if not raw.strip():
    raise DataError(f"Dataset {name!r}: empty CSV input.")
  _check_field_counts(raw, name)
  try:
    return pd.read_csv(io.BytesIO(raw), header=None, dtype=str,
                       keep_default_na=False, na_filter=False,
                       encoding="utf-8-sig", skip_blank_lines=True)
  except pd.errors.EmptyDataError:
    raise DataError(f"Dataset {name!r}: empty CSV input.") from None
  except pd.errors.ParserError as e:
    match = _PARSER_LINE.search(str(e))
    where = f" at row {int(match.group(1)) - 1}" if match else ""
    raise DataError(f"Dataset {name!r}: ragged CSV{where}: {e}") from None
  except UnicodeDecodeError as e:
    raise DataError(f"Dataset {name!r}: input is not UTF-8: {e}") from None


def _parse_column(cells: List[object], label: str, name: str
                  ) -> Optional[np.ndarray]:
  """Parses one column; returns None if a cell is not a decimal number."""
  values = np.empty(len(cells), dtype=np.float64)
  for i, cell in enumerate(cells):
    try:
      values[i] = float(cell)
    except (TypeError, ValueError):
      return None
    if not np.isfinite(values[i]):
      raise DataError(
          f"Dataset {name!r}: non-finite value {cell!r} at row {i + 1}, "
          f"column {label!r}.")
  return values


def _first_bad_cell(cells: List[object]) -> int:
  for i, cell in enumerate(cells):
    try:
      float(cell)
    except (TypeError, ValueError):
      return i
  raise AssertionError("no unparsable cell")


def load_csv(source: CsvSource, name: str, *,
             skip_non_numeric: bool = False) -> Dataset:
  """Loads a UTF-8 CSV file with a header row into a Dataset.

  Args:
    source: CSV bytes or a binary stream.
    name: Identifier of the resulting dataset.
    skip_non_numeric: Drop columns holding cells that do not parse as
      decimal numbers (e.g. a species label) instead of failing. Skipped
      labels are recorded on the Dataset and logged.
  Returns:
    The Dataset with columns in header order.
  Raises:
    DataError: for empty input, ragged rows, unparsable or non-finite cells.
  """
  raw = bytes(source) if isinstance(source, (bytes, bytearray)) else (
      source.read())
  frame = _read_cells(raw, name)
  header = [str(x) for x in frame.iloc[0].tolist()]
  body = frame.iloc[1:]
  if body.shape[0] == 0:
    raise DataError(f"Dataset {name!r}: CSV has a header but no data rows.")
  labels, vectors, skipped = [], [], []
  for j, label in enumerate(header):
    cells = body.iloc[:, j].tolist()
    values = _parse_column(cells, label, name)
    if values is None:
      if skip_non_numeric:
        skipped.append(label)
        continue
      row = _first_bad_cell(cells)
      raise DataError(
          f"Dataset {name!r}: cannot parse {cells[row]!r} as a number at "
          f"row {row + 1}, column {label!r}.")
    labels.append(label)
    vectors.append(values)
  if skipped:
    logging.warning("Skipping non-numeric columns %s of dataset %r.",
                    skipped, name)
  return from_columns(name, zip(labels, vectors), skipped_labels=skipped)


def export_csv(ds: Dataset) -> bytes:
  """Renders a Dataset as CSV whose cells reload to the identical floats."""
  frame = pd.DataFrame(
      {label: [special.shortest_repr(v) for v in values.tolist()]
       for label, values in ds.columns},
      columns=list(ds.labels))
  return frame.to_csv(index=False, lineterminator="\n").encode("utf-8")


def column(ds: Dataset, label: str) -> np.ndarray:
  """Returns the read-only values of column `label`."""
  try:
    return ds.values[ds.labels.index(label)]
  except ValueError:
    close = difflib.get_close_matches(label, ds.labels, n=3)
    hint = f" Did you mean {', '.join(close)}?" if close else ""
    raise DataError(
        f"Unknown column {label!r} in dataset {ds.name!r}; available columns:"
        f" {', '.join(ds.labels)}.{hint}") from None


def summarize(ds: Dataset, label: str) -> ColumnStats:
  """Min, mean, max and variances of one column."""
  values = column(ds, label)
  lo = float(np.min(values))
  hi = float(np.max(values))
  # Rounding of the mean may step outside the data range on constant columns.
  avg = min(max(stats.mean(values), lo), hi)
  if values.shape[0] >= 2:
    variance_pop = stats.variance(values, ddof=0)
    variance_sample = stats.variance(values, ddof=1)
  else:
    variance_pop = variance_sample = None
  return ColumnStats(label=label, n=int(values.shape[0]), min=lo, mean=avg,
                     max=hi, variance_pop=variance_pop,
                     variance_sample=variance_sample)


def summarize_all(ds: Dataset, labels: Optional[Sequence[str]] = None
                  ) -> List[ColumnStats]:
  """Summaries of several columns, in the order requested."""
  return [summarize(ds, label)
          for label in (ds.labels if labels is None else labels)]
