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

"""Errors raised by CorrAudit.

Every error carries the exit code the command line front-end reports for it.
"""

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3


class CorrAuditError(Exception):
  """Base class of all CorrAudit errors."""

  exit_code: int = EXIT_USAGE


class UsageError(CorrAuditError):
  """Malformed command line or argument text."""

  exit_code = EXIT_USAGE


class ConfigError(CorrAuditError):
  """An evaluation protocol or audit spec violates its invariants."""

  exit_code = EXIT_USAGE


class DataError(CorrAuditError):
  """Input data is malformed, too small or addressed by an unknown name."""

  exit_code = EXIT_DATA


class NumericError(CorrAuditError):
  """A quantity is mathematically undefined for the given data."""

  exit_code = EXIT_NUMERIC


class InternalError(CorrAuditError):
  """A report was assembled from incomplete parts."""

  exit_code = EXIT_USAGE
