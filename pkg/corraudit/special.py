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

"""Generally useful small numeric functions."""

from corraudit._src.utils.special import compensated_sum
from corraudit._src.utils.special import format_fixed
from corraudit._src.utils.special import format_significant
from corraudit._src.utils.special import shortest_repr
from corraudit._src.utils.special import values_tied


__all__ = [
    "compensated_sum",
    "values_tied",
    "shortest_repr",
    "format_significant",
    "format_fixed",
]
