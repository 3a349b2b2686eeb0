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

"""Train/score protocols and their deterministic shuffles."""

from corraudit._src.protocols import EvalOutcome
from corraudit._src.protocols import Protocol
from corraudit._src.protocols import fold_assignments
from corraudit._src.protocols import parse_protocol
from corraudit._src.protocols import run_protocol
from corraudit._src.protocols import shuffle_indices
from corraudit._src.protocols import splitmix64_stream


__all__ = [
    "EvalOutcome",
    "Protocol",
    "fold_assignments",
    "parse_protocol",
    "run_protocol",
    "shuffle_indices",
    "splitmix64_stream",
]
