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

"""Tests for corraudit._src.stats."""

from fractions import Fraction
import math

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np
import scipy.stats

from corraudit._src import constants
from corraudit._src import dataset
from corraudit._src import reference_data
from corraudit._src import stats
from corraudit._src.errors import DataError, NumericError


def exact_correlation(xs, ys) -> float:
  xs = [Fraction(float(x)) for x in xs]
  ys = [Fraction(float(y)) for y in ys]
  x_mean = sum(xs) / len(xs)
  y_mean = sum(ys) / len(ys)
  sxy = sum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys))
  sxx = sum((x - x_mean) ** 2 for x in xs)
  syy = sum((y - y_mean) ** 2 for y in ys)
  return math.copysign(math.sqrt(sxy * sxy / (sxx * syy)), sxy)


class StatsTest(parameterized.TestCase):

  def assert_allclose(self, x, y, rtol=constants.TESTING_RELATIVE_TOLERANCE):
    np.testing.assert_allclose(x, y, rtol=rtol, atol=0)

  @parameterized.parameters([
      ("mtcars", "mpg", "disp", -0.84755137926247867),
      ("mtcars", "mpg", "hp", -0.77616837182658637),
      ("iris", "petal_length", "sepal_length", 0.8717537758865832),
      ("iris", "petal_length", "petal_width", 0.96286543140279615),
  ])
  def test_pearson_r_reference(self, name, y_label, x_label, expected):
    ds = reference_data.load_embedded(name)
    result = stats.pearson_r(dataset.column(ds, x_label),
                             dataset.column(ds, y_label), x_label, y_label)
    self.assert_allclose(result.r, expected)
    self.assertEqual(result.n, ds.n)
    self.assertEqual((result.x_label, result.y_label), (x_label, y_label))

  def test_perfect_correlation(self):
    xs = np.arange(10.0)
    self.assertEqual(stats.pearson_r(xs, 3 * xs + 1).r, 1.0)
    self.assertEqual(stats.pearson_r(xs, -0.5 * xs).r, -1.0)

  @parameterized.parameters([1e-150, 1e-100, 1e100, 1e150])
  def test_extreme_scale(self, scale):
    xs = np.array([0.0, 1.0, 2.0, 4.0]) * scale
    self.assertEqual(stats.pearson_r(xs, xs).r, 1.0)
    self.assertEqual(stats.pearson_r(xs, -xs).r, -1.0)
    self.assertAlmostEqual(
        stats.pearson_r(xs, np.array([1.0, 0.0, 3.0, 2.0]) * scale).r,
        stats.pearson_r([0.0, 1.0, 2.0, 4.0], [1.0, 0.0, 3.0, 2.0]).r,
        places=12)

  def test_two_points(self):
    self.assertEqual(abs(stats.pearson_r([1.0, 2.0], [5.0, 3.0]).r), 1.0)

  def test_against_exact_arithmetic(self):
    rng = np.random.default_rng(0)
    for _ in range(1000):
      n = int(rng.integers(2, 40))
      xs = rng.uniform(-100, 100, size=n)
      ys = 0.3 * xs + rng.normal(scale=20.0, size=n)
      r = stats.pearson_r(xs, ys).r
      self.assertLessEqual(abs(r), 1.0)
      np.testing.assert_allclose(r, exact_correlation(xs, ys), rtol=0,
                                 atol=constants.TESTING_RELATIVE_TOLERANCE)

  def test_symmetry(self):
    rng = np.random.default_rng(1)
    for _ in range(100):
      xs, ys = rng.normal(size=(2, 25))
      self.assertEqual(stats.pearson_r(xs, ys).r, stats.pearson_r(ys, xs).r)

  @parameterized.parameters([(3.0, 2.0), (-10.0, -0.25), (1e3, 7.0)])
  def test_affine_invariance(self, shift, scale):
    rng = np.random.default_rng(2)
    xs, ys = rng.normal(size=(2, 30))
    r = stats.pearson_r(xs, ys).r
    self.assert_allclose(stats.pearson_r(shift + scale * xs, ys).r,
                         math.copysign(1.0, scale) * r,
                         rtol=constants.TESTING_IDENTITY_TOLERANCE)

  def test_matches_scipy(self):
    rng = np.random.default_rng(3)
    for _ in range(50):
      xs, ys = rng.normal(size=(2, 40))
      self.assert_allclose(stats.pearson_r(xs, ys).r,
                           scipy.stats.pearsonr(xs, ys)[0], rtol=1e-10)

  def test_constant_variable(self):
    with self.assertRaisesRegex(NumericError, "constant variable"):
      stats.pearson_r([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])
    with self.assertRaisesRegex(NumericError, "constant variable"):
      stats.pearson_r([1.0, 2.0, 3.0], [4.0, 4.0, 4.0])

  def test_bad_lengths(self):
    with self.assertRaisesRegex(DataError, "Length mismatch"):
      stats.pearson_r([1.0, 2.0, 3.0], [1.0, 2.0])
    with self.assertRaisesRegex(DataError, "At least 2"):
      stats.pearson_r([1.0], [2.0])

  def test_mean_and_variance(self):
    ds = reference_data.load_embedded("mtcars")
    mpg = dataset.column(ds, "mpg")
    self.assert_allclose(stats.mean(mpg), 20.090625)
    self.assert_allclose(stats.variance(mpg), 35.188974609374995)
    self.assert_allclose(stats.variance(mpg, ddof=1), 36.32410282258064)
    with self.assertRaises(NumericError):
      stats.mean([])
    with self.assertRaises(NumericError):
      stats.variance([1.0], ddof=1)

  def test_covariance_terms(self):
    ds = reference_data.load_embedded("mtcars")
    terms = stats.covariance_terms(dataset.column(ds, "disp"),
                                   dataset.column(ds, "mpg"))
    self.assert_allclose(terms.sxy, -19626.0134375)
    self.assert_allclose(terms.sxx, 476184.7946875)
    self.assert_allclose(terms.syy, 1126.0471875)

  def test_rescaling_matches_direct_quotient(self):
    rng = np.random.default_rng(7)
    for _ in range(1000):
      terms = stats.CovarianceTerms(
          sxy=float(rng.uniform(-1, 1)), sxx=float(rng.uniform(1e-3, 1e3)),
          syy=float(rng.uniform(1e-3, 1e3)))
      direct = terms.sxy / math.sqrt(terms.sxx * terms.syy)
      self.assertEqual(stats.correlation_from_terms(terms),
                       max(-1.0, min(1.0, direct)))

  def test_correlation_from_terms_extreme_products(self):
    terms = stats.CovarianceTerms(sxy=1e300, sxx=1e300, syy=1e300)
    self.assertEqual(stats.correlation_from_terms(terms), 1.0)
    terms = stats.CovarianceTerms(sxy=-5e-310, sxx=5e-310, syy=5e-310)
    self.assertEqual(stats.correlation_from_terms(terms), -1.0)
    terms = stats.CovarianceTerms(sxy=1e280, sxx=1e300, syy=1e300)
    self.assertAlmostEqual(stats.correlation_from_terms(terms), 1e-20,
                           delta=1e-35)


if __name__ == "__main__":
  absltest.main()
