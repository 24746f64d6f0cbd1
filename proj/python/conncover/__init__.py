# Copyright 2026 The conncover Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Connected sensor cover: MIN-CSC and budgeted solvers with exact oracles."""

from conncover._core import (
    GuardExceeded,
    Instance,
    Verdict,
    comm_edges,
    components,
    exact_budgeted,
    exact_min_csc,
    generate,
    group_modulus,
    normalize,
    solve_budgeted,
    solve_min_csc,
    verify_budgeted,
    verify_min_csc,
)

__all__ = [
    "GuardExceeded",
    "Instance",
    "Verdict",
    "comm_edges",
    "components",
    "exact_budgeted",
    "exact_min_csc",
    "generate",
    "group_modulus",
    "normalize",
    "solve_budgeted",
    "solve_min_csc",
    "verify_budgeted",
    "verify_min_csc",
]
