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

"""Some constants used throughout CorrAudit."""

TIE_TOLERANCE = 1e-12
CORRELATION_CLAMP = 1.0
METRIC_NAMES = ("mape", "mae", "rmse")
PERCENT = 100.0
TESTING_RELATIVE_TOLERANCE = 1e-12
TESTING_IDENTITY_TOLERANCE = 1e-9
