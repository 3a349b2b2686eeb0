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

"""Scatter plots with the fitted least-squares line, rendered as SVG."""
# pylint: disable=g-importing-member
import dataclasses
import io
from typing import Optional

import matplotlib
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure
import numpy as np

from corraudit._src import dataset as dataset_lib
from corraudit._src import linear_model
from corraudit._src.config import get_config
from corraudit._src.errors import ConfigError
from corraudit._src.utils import special


_MIN_CANVAS = 100
_BAND_POINTS = 101
# Deterministic SVG: fixed ids, text kept as text, no timestamp.
_SVG_RC = {"svg.hashsalt": "corraudit", "svg.fonttype": "none"}


@dataclasses.dataclass(frozen=True)
class PlotSpec:
  """What to draw: sizes are SVG user units, defaults come from the config."""

  x_label: str
  y_label: str
  width: Optional[int] = None
  height: Optional[int] = None
  show_band: Optional[bool] = None
  show_fit: bool = True
  annotate: bool = True

  def resolved(self) -> "PlotSpec":
    config = get_config()
    spec = dataclasses.replace(
        self,
        width=config.plot_width if self.width is None else self.width,
        height=config.plot_height if self.height is None else self.height,
        show_band=(config.plot_show_band if self.show_band is None
                   else self.show_band))
    if spec.width < _MIN_CANVAS or spec.height < _MIN_CANVAS:
      raise ConfigError(
          f"Plot canvas must be at least {_MIN_CANVAS}x{_MIN_CANVAS}, got "
          f"{spec.width}x{spec.height}.")
    return spec


def _padded_range(values: np.ndarray, padding: float):
  lo, hi = float(np.min(values)), float(np.max(values))
  pad = padding * (hi - lo) if hi > lo else 0.5
  return lo - pad, hi + pad


def render_plot(ds: dataset_lib.Dataset, spec: PlotSpec) -> bytes:
  """Renders y against x with the fitted line, its standard-error band and r.

  Args:
    ds: Dataset holding both columns.
    spec: Columns and drawing options.
  Returns:
    SVG bytes, identical for identical inputs.
  Raises:
    DataError, NumericError: as for fitting y on x.
  """
  spec = spec.resolved()
  xs = dataset_lib.column(ds, spec.x_label)
  ys = dataset_lib.column(ds, spec.y_label)
  fit = linear_model.fit_ols(xs, ys, x_label=spec.x_label,
                             y_label=spec.y_label)
  padding = get_config().plot_padding

  with matplotlib.rc_context(_SVG_RC):
    fig = Figure(figsize=(spec.width / 72, spec.height / 72), dpi=72)
    FigureCanvasSVG(fig)
    ax = fig.add_subplot(1, 1, 1)
    if spec.show_fit:
      grid = np.linspace(float(np.min(xs)), float(np.max(xs)), _BAND_POINTS)
      fitted = linear_model.predict(fit, grid)
      if spec.show_band and fit.residual_std_error is not None:
        half = linear_model.standard_error_band(fit, grid)
        ax.fill_between(grid, fitted - half, fitted + half, color="tab:gray",
                        alpha=0.3, linewidth=0, gid="se-band")
      ax.plot(grid[[0, -1]], fitted[[0, -1]], color="tab:blue",
              linewidth=1.5, gid="fit-line")
    ax.plot(xs, ys, linestyle="none", marker="o", markersize=4,
            color="black", gid="data-points")
    if spec.annotate:
      decimals = get_config().correlation_decimals
      ax.text(0.02, 0.97, f"r = {special.format_fixed(fit.r, decimals)}",
              transform=ax.transAxes, verticalalignment="top",
              gid="r-annotation")
    ax.set_xlim(*_padded_range(xs, padding))
    ax.set_ylim(*_padded_range(ys, padding))
    ax.set_xlabel(spec.x_label)
    ax.set_ylabel(spec.y_label)
    buffer = io.BytesIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
  return buffer.getvalue()
