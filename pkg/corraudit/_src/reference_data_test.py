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

"""Tests for corraudit._src.reference_data."""

import dataclasses
import hashlib
from unittest import mock

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from corraudit._src import constants
from corraudit._src import dataset
from corraudit._src import reference_data
from corraudit._src.errors import DataError


class ReferenceDataTest(parameterized.TestCase):

  def assert_allclose(self, x, y):
    np.testing.assert_allclose(x, y, rtol=constants.TESTING_RELATIVE_TOLERANCE)

  def test_available(self):
    self.assertEqual(reference_data.available_datasets(), ("iris", "mtcars"))

  @parameterized.parameters(["iris", "mtcars"])
  def test_checksum(self, name):
    payload = reference_data.embedded_payload(name)
    self.assertEqual(hashlib.sha256(payload).hexdigest(),
                     reference_data.EMBEDDED[name].sha256)

  def test_corrupted_payload(self):
    entry = dataclasses.replace(reference_data.EMBEDDED["mtcars"],
                                sha256="0" * 64)
    with mock.patch.dict(reference_data.EMBEDDED, {"mtcars": entry}):
      with self.assertRaisesRegex(DataError, "corrupted"):
        reference_data.load_embedded("mtcars")

  def test_unknown(self):
    with self.assertRaisesRegex(DataError, "available: iris, mtcars"):
      reference_data.load_embedded("titanic")

  def test_mtcars_shape(self):
    ds = reference_data.load_embedded("mtcars")
    self.assertEqual(ds.n, 32)
    self.assertEqual(ds.labels[:4], ("mpg", "cyl", "disp", "hp"))
    self.assertEqual(ds.skipped_labels, ("model",))

  @parameterized.parameters([
      ("mpg", 10.4, 20.090625, 33.9),
      ("disp", 71.1, 230.721875, 472.0),
      ("hp", 52.0, 146.6875, 335.0),
  ])
  def test_mtcars_summaries(self, label, lo, avg, hi):
    stats = dataset.summarize(reference_data.load_embedded("mtcars"), label)
    self.assertEqual((stats.min, stats.max), (lo, hi))
    self.assert_allclose(stats.mean, avg)

  def test_iris(self):
    ds = reference_data.load_embedded("iris")
    self.assertEqual(ds.n, 150)
    self.assertEqual(ds.skipped_labels, ("species",))
    self.assert_allclose(dataset.summarize(ds, "petal_length").mean, 3.758)
    self.assert_allclose(dataset.summarize(ds, "sepal_length").mean,
                         5.8433333333333333)
    self.assert_allclose(dataset.summarize(ds, "petal_width").mean,
                         1.1993333333333333)

  @parameterized.parameters([
      ("mtcars", "mpg", ("disp", "hp")),
      ("iris", "petal_length", ("sepal_length", "petal_width")),
  ])
  def test_study_case(self, name, y_label, x_labels):
    spec = reference_data.study_case(name, seed=3)
    self.assertEqual(spec.y_label, y_label)
    self.assertEqual(spec.x_labels, x_labels)
    self.assertEqual([str(p) for p in spec.protocols], ["insample", "loo"])
    self.assertEqual(spec.metrics, constants.METRIC_NAMES)

  def test_export_round_trip(self):
    ds = reference_data.load_embedded("iris")
    self.assertEqual(dataset.load_csv(dataset.export_csv(ds), "iris"), ds)


if __name__ == "__main__":
  absltest.main()
