# Copyright 2026 The cargo-triangles Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Two-server differentially private triangle counting."""

from cargo_triangles._core import (
    CSV_HEADER,
    CargoError,
    DealerRng,
    DomainError,
    Graph,
    IoError,
    MultiplicationGroup,
    NoiseRng,
    NoisyDegrees,
    ParameterError,
    ParseError,
    ProjectedGraph,
    ProtocolError,
    add_local,
    central_lap,
    deal_mg,
    deal_mg_with_values,
    degree_similarity,
    derive_seed,
    exact_triangle_count,
    experiment_csv,
    load_edge_list,
    max_private,
    mul3,
    parse_edge_list,
    perturb,
    project,
    project_random,
    reconstruct,
    run_cargo,
    run_experiment,
    sample_gamma,
    sample_laplace,
    secure_triangle_count,
    share,
    theta_from_noisy_max,
    write_edge_list,
)

__all__ = [name for name in dir() if not name.startswith("_")]
