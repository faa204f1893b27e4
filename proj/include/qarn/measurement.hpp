// Copyright 2026 The QARN Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "qarn/circuit.hpp"

namespace qarn {

/// Probabilities closer than this to the maximum count as a tie.
inline constexpr double kTieTolerance = 1e-9;

struct IndexDistribution {
    std::vector<double> probabilities;
    /// P(S = 0) for modes with a score qubit, 1.0 otherwise.
    double postselect_probability = 1.0;
    Mode mode = Mode::Generalized;
};

struct ShotCounts {
    std::vector<std::uint64_t> counts;
    /// Accepted shots; equals the sum of counts.
    std::uint64_t shots = 0;
    /// Shots discarded by post-selection on S = 0.
    std::uint64_t rejected = 0;
    std::uint64_t seed = 0;
};

struct Decision {
    std::size_t index = 0;
    bool is_tie = false;
};

/// Decision distribution over array indices. Modes without a score qubit
/// report the D marginal; modes with one report D conditioned on S = 0.
IndexDistribution index_distribution(const StateVector &state, const QarnProblem &problem);

/// Draws @p shots samples by inverse CDF. The generator is std::mt19937_64
/// seeded with @p seed; each draw takes one 64-bit output x and uses
/// u = (x >> 11) * 2^-53. The categories are the m indices weighted by
/// p_j * postselect_probability followed by one rejection category.
ShotCounts sample(const IndexDistribution &dist, std::uint64_t shots, std::uint64_t seed);

/// Argmax; ties within kTieTolerance resolve to the lowest index.
Decision decide(const IndexDistribution &dist);

} // namespace qarn
