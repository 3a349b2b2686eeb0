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

"""Tests for corraudit._src.protocols."""

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from corraudit._src import constants
from corraudit._src import dataset
from corraudit._src import protocols
from corraudit._src import reference_data
from corraudit._src.errors import ConfigError, NumericError, UsageError


# (dataset, response, predictor, protocol, mape, mae, rmse).
_GOLDEN_METRICS = [
    ("mtcars", "mpg", "disp", "insample", 12.63196281469019,
     2.6054734857610681, 3.1482072740002795),
    ("mtcars", "mpg", "disp", "loo", 13.467469266331879, 2.7815067645755601,
     3.3811499548295059),
    ("mtcars", "mpg", "disp", "kfold:5", 15.581979818428937,
     3.2153623135241019, 3.8036569753891174),
    ("mtcars", "mpg", "hp", "insample", 15.669438014385953,
     2.9074524742347626, 3.7402970868994892),
    ("mtcars", "mpg", "hp", "loo", 17.110195206858086, 3.1607029359940336,
     4.1537095302144421),
    ("mtcars", "mpg", "hp", "kfold:5", 18.250062449764318, 3.4130674409740852,
     4.3843103796029729),
    ("iris", "petal_length", "sepal_length", "insample", 27.650087308290797,
     0.70670881062299147, 0.86200988053045193),
    ("iris", "petal_length", "sepal_length", "loo", 27.971035309541739,
     0.7152048076783062, 0.87155330538238878),
    ("iris", "petal_length", "petal_width", "insample", 11.130100662018913,
     0.36579694412763784, 0.4750070397148788),
    ("iris", "petal_length", "petal_width", "loo", 11.291599937352946,
     0.37086355579460749, 0.48184458871750013),
]


class ProtocolsTest(parameterized.TestCase):

  def setUp(self):
    super().setUp()
    self.mtcars = reference_data.load_embedded("mtcars")

  @parameterized.parameters(*_GOLDEN_METRICS)
  def test_golden_metrics(self, name, y_label, x_label, text, mape, mae, rmse):
    ds = reference_data.load_embedded(name)
    protocol = protocols.parse_protocol(text, seed=0)
    outcome = protocols.run_protocol(ds, y_label, x_label, protocol)
    np.testing.assert_allclose(
        [outcome.metrics.mape, outcome.metrics.mae, outcome.metrics.rmse],
        [mape, mae, rmse], rtol=constants.TESTING_RELATIVE_TOLERANCE)
    self.assertEqual(outcome.n_test, ds.n)

  def test_resubstitution_rmse_variance_identity(self):
    rng = np.random.default_rng(8)
    for trial in range(1000):
      n = int(rng.integers(3, 201))
      xs = rng.normal(size=n)
      ys = rng.uniform(-2.0, 2.0) * xs + rng.normal(scale=1.5, size=n)
      ds = dataset.from_columns(f"random{trial}", {"x": xs, "y": ys})
      outcome = protocols.run_protocol(ds, "y", "x", protocols.Protocol(),
                                       metrics=("rmse",))
      r = outcome.fit_on_full.r
      np.testing.assert_allclose(
          outcome.metrics.rmse ** 2, (1.0 - r * r) * np.var(ys),
          rtol=constants.TESTING_IDENTITY_TOLERANCE)

  @parameterized.parameters([
      ("insample", 32, (32,)),
      ("loo", 31, (1,) * 32),
      ("kfold:5", 25, (7, 7, 6, 6, 6)),
      ("holdout:0.8", 25, (7,)),
  ])
  def test_sizes(self, text, n_train, fold_sizes):
    outcome = protocols.run_protocol(self.mtcars, "mpg", "wt",
                                     protocols.parse_protocol(text))
    self.assertEqual(outcome.n_train, n_train)
    self.assertEqual(outcome.fold_sizes, fold_sizes)
    self.assertEqual(outcome.n_test, sum(fold_sizes))
    self.assertEqual(outcome.series.n, outcome.n_test)

  def test_loo_equals_kfold_with_one_row_per_fold(self):
    for x_label in ("disp", "hp", "wt"):
      loo = protocols.run_protocol(self.mtcars, "mpg", x_label,
                                   protocols.Protocol(kind="loo"))
      kfold = protocols.run_protocol(
          self.mtcars, "mpg", x_label,
          protocols.Protocol(kind="kfold", k=self.mtcars.n, seed=123))
      self.assertEqual(loo.metrics, kfold.metrics)
      self.assertEqual(loo.series, kfold.series)

  def test_insample_uses_full_fit(self):
    outcome = protocols.run_protocol(self.mtcars, "mpg", "disp",
                                     protocols.Protocol())
    self.assertEqual(str(outcome.protocol), "insample")
    np.testing.assert_array_equal(outcome.series.actual,
                                  dataset.column(self.mtcars, "mpg"))
    self.assertEqual(outcome.fit_on_full.n, 32)

  @parameterized.parameters(["holdout:0.7", "kfold:4"])
  def test_deterministic_for_seed(self, text):
    run = lambda seed: protocols.run_protocol(  # pylint: disable=g-long-lambda
        self.mtcars, "mpg", "hp", protocols.parse_protocol(text, seed=seed))
    self.assertEqual(run(11).metrics, run(11).metrics)
    self.assertNotEqual(run(11).metrics, run(12).metrics)

  def test_holdout_keeps_original_row_order(self):
    ds = dataset.from_columns("d", {"x": [3.0, 1.0, 4.0, 1.5, 5.0, 9.0, 2.0,
                                          6.0, 5.5, 3.5],
                                    "y": np.arange(1.0, 11.0)})
    outcome = protocols.run_protocol(ds, "y", "x",
                                     protocols.parse_protocol("holdout:0.6"))
    actual = outcome.series.actual.tolist()
    self.assertLen(actual, 4)
    self.assertEqual(actual, sorted(actual))
    self.assertEqual(outcome.n_train, 6)

  def test_shuffle_indices_golden(self):
    self.assertEqual(protocols.shuffle_indices(5, 42).tolist(),
                     [1, 2, 0, 4, 3])
    self.assertEqual(protocols.shuffle_indices(10, 7).tolist(),
                     [8, 1, 5, 9, 0, 4, 3, 2, 6, 7])
    self.assertEqual(int(protocols.splitmix64_stream(0, 1)[0]),
                     16294208416658607535)

  @parameterized.parameters([(0, 1), (3, -1), (3, 2**64)])
  def test_shuffle_indices_rejects(self, n, seed):
    with self.assertRaises(ConfigError):
      protocols.shuffle_indices(n, seed)

  def test_fold_assignments(self):
    folds = protocols.fold_assignments(10, 3, shuffle=False)
    self.assertEqual([f.tolist() for f in folds],
                     [[0, 1, 2, 3], [4, 5, 6], [7, 8, 9]])
    shuffled = protocols.fold_assignments(10, 3, seed=5)
    self.assertEqual([len(f) for f in shuffled], [4, 3, 3])
    self.assertEqual(sorted(np.concatenate(shuffled).tolist()),
                     list(range(10)))
    for fold in shuffled:
      self.assertEqual(fold.tolist(), sorted(fold.tolist()))
    with self.assertRaises(ConfigError):
      protocols.fold_assignments(3, 4)

  @parameterized.parameters([
      ("insample", "insample"), ("LOO", "loo"), ("kfold:10", "kfold:10"),
      ("holdout:0.8", "holdout:0.8"), (" resubstitution ", "insample"),
  ])
  def test_parse_protocol(self, text, canonical):
    self.assertEqual(str(protocols.parse_protocol(text)), canonical)

  @parameterized.parameters(["", "kfold", "kfold:x", "loo:3", "cv:5",
                             "holdout:"])
  def test_parse_protocol_usage_error(self, text):
    with self.assertRaises(UsageError):
      protocols.parse_protocol(text)

  @parameterized.parameters(["kfold:1", "holdout:1.5", "holdout:0"])
  def test_parse_protocol_config_error(self, text):
    with self.assertRaises(ConfigError):
      protocols.parse_protocol(text)

  @parameterized.parameters(["kfold:40", "holdout:0.01", "holdout:0.05"])
  def test_protocol_does_not_fit_dataset(self, text):
    with self.assertRaises(ConfigError):
      protocols.run_protocol(self.mtcars, "mpg", "hp",
                             protocols.parse_protocol(text))

  def test_too_few_rows_for_cross_validation(self):
    ds = dataset.from_columns("d", {"x": [1.0, 2.0], "y": [1.0, 3.0]})
    with self.assertRaises(ConfigError):
      protocols.run_protocol(ds, "y", "x", protocols.Protocol(kind="loo"))

  def test_constant_training_fold_names_fold(self):
    ds = dataset.from_columns("d", {"x": [1.0, 1.0, 1.0, 2.0],
                                    "y": [1.0, 2.0, 3.0, 4.0]})
    with self.assertRaisesRegex(NumericError, "fold 4 of 4"):
      protocols.run_protocol(ds, "y", "x", protocols.Protocol(kind="loo"))


if __name__ == "__main__":
  absltest.main()
