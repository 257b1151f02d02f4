// Copyright 2026 The pdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "pdiag/constructions.hpp"
#include "pdiag/diagram.hpp"

namespace pdiag {

/// Generator used by every randomized routine; callers always seed it.
using Rng = std::mt19937_64;

/// Random diagram with total multiplicity at most `max_points` and
/// coordinates in [0, max_coordinate]. About half the coordinates are snapped
/// to a 0.5 grid so ties, repeated points and equal-cost alternatives occur
/// often.
PersistenceDiagram random_diagram(Rng& rng, std::uint32_t max_points,
                                  double max_coordinate);

/// Random extension input: g(x) points drawn in the stratum of index n (a
/// quarter of them diagonal) and embedding coordinates in [0, 1]. With
/// `zero_embedding` every coordinate is 0.
ExtensionSpec random_extension_spec(Rng& rng, std::uint32_t n, std::uint32_t m,
                                    bool zero_embedding);

}  // namespace pdiag
