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

"""Tests for corraudit._src.plotting."""

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from corraudit._src import dataset
from corraudit._src import linear_model
from corraudit._src import plotting
from corraudit._src import reference_data
from corraudit._src.config import config_context
from corraudit._src.errors import ConfigError, DataError, NumericError


def group(svg: str, gid: str) -> str:
  """Text of the SVG group with id `gid`, up to the next identified group."""
  start = svg.index(f'<g id="{gid}"')
  end = svg.find('<g id="', start + 1)
  return svg[start:] if end < 0 else svg[start:end]


class PlottingTest(parameterized.TestCase):

  def setUp(self):
    super().setUp()
    self.mtcars = reference_data.load_embedded("mtcars")

  def render(self, **kwargs) -> str:
    spec = plotting.PlotSpec(x_label="disp", y_label="mpg", **kwargs)
    return plotting.render_plot(self.mtcars, spec).decode("utf-8")

  def test_scatter_with_fit(self):
    svg = self.render()
    self.assertTrue(svg.lstrip().startswith("<?xml"))
    self.assertIn("r = -0.85", svg)
    self.assertEqual(group(svg, "data-points").count("<use"), 32)
    self.assertIn('id="fit-line"', svg)
    self.assertIn('id="se-band"', svg)
    self.assertIn(">disp<", svg)
    self.assertIn(">mpg<", svg)

  def test_deterministic(self):
    self.assertEqual(self.render(), self.render())

  def test_canvas_size(self):
    self.assertIn('width="640pt"', self.render())
    self.assertIn('width="300pt"', self.render(width=300, height=200))
    with config_context(plot_width=800):
      self.assertIn('width="800pt"', self.render())
    with self.assertRaises(ConfigError):
      self.render(width=50)

  def test_options(self):
    no_band = self.render(show_band=False)
    self.assertNotIn('id="se-band"', no_band)
    self.assertIn('id="fit-line"', no_band)
    no_fit = self.render(show_fit=False)
    self.assertNotIn('id="fit-line"', no_fit)
    self.assertNotIn('id="se-band"', no_fit)
    with config_context(plot_show_band=False):
      self.assertNotIn('id="se-band"', self.render())
    self.assertNotIn("r = ", self.render(annotate=False))

  def test_exact_line_has_zero_width_band(self):
    ds = dataset.from_columns("line", {"x": [1.0, 2.0, 3.0, 4.0],
                                       "y": [3.0, 5.0, 7.0, 9.0]})
    svg = plotting.render_plot(
        ds, plotting.PlotSpec(x_label="x", y_label="y")).decode("utf-8")
    self.assertIn("r = 1.00", svg)
    self.assertEqual(group(svg, "data-points").count("<use"), 4)
    self.assertIn('id="se-band"', svg)
    fit = linear_model.fit_ols([1.0, 2.0, 3.0, 4.0], [3.0, 5.0, 7.0, 9.0])
    self.assertEqual(fit.residual_std_error, 0.0)
    np.testing.assert_array_equal(
        linear_model.standard_error_band(fit, np.linspace(0.0, 5.0, 11)), 0.0)

  def test_constant_response(self):
    ds = dataset.from_columns("flat", {"x": [1.0, 2.0, 3.0],
                                       "y": [2.0, 2.0, 2.0]})
    svg = plotting.render_plot(
        ds, plotting.PlotSpec(x_label="x", y_label="y")).decode("utf-8")
    self.assertIn("r = n/a", svg)

  def test_errors(self):
    with self.assertRaises(DataError):
      plotting.render_plot(self.mtcars,
                           plotting.PlotSpec(x_label="nope", y_label="mpg"))
    ds = dataset.from_columns("flat", {"x": [1.0, 1.0, 1.0],
                                       "y": [1.0, 2.0, 3.0]})
    with self.assertRaises(NumericError):
      plotting.render_plot(ds, plotting.PlotSpec(x_label="x", y_label="y"))


if __name__ == "__main__":
  absltest.main()
