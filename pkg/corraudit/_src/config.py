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

"""Manages global CorrAudit configuration."""
import contextlib
import dataclasses
import functools
from typing import Literal

from corraudit._src import constants


@functools.partial(dataclasses.dataclass, frozen=True)
class CorrAuditConfig():
  """CorrAudit configuration."""

  default_seed: int = 0
  # MAPE is undefined for zero targets; "exclude" drops those rows.
  zero_policy: Literal["error", "exclude"] = "error"
  tie_tolerance: float = constants.TIE_TOLERANCE
  # Text report settings
  text_significant_digits: int = 4
  correlation_decimals: int = 2
  # Plot settings
  plot_width: int = 640
  plot_height: int = 480
  plot_padding: float = 0.05
  plot_show_band: bool = True


_config = CorrAuditConfig()


def get_config() -> CorrAuditConfig:
  return _config


def set_config(**settings) -> None:
  global _config
  _config = dataclasses.replace(_config, **settings)


@contextlib.contextmanager
def config_context(**settings):
  prior_settings = dataclasses.asdict(get_config())
  set_config(**settings)
  try:
    yield get_config()
  finally:
    set_config(**prior_settings)
