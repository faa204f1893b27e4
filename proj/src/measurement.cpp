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

#include "qarn/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qarn/error.hpp"

namespace qarn {

IndexDistribution index_distribution(const StateVector &state, const QarnProblem &problem) {
    if (!(state.layout() == build_layout(problem, std::numeric_limits<std::size_t>::max())))
        throw InputError("state layout does not match the problem's " +
                         std::string(to_string(problem.mode)) + " layout");
    const auto map = site_map(problem);
    const auto m = problem.m();
    const auto dim = state.layout().dimension(map.d);

    IndexDistribution dist;
    dist.mode = problem.mode;
    std::vector<double> raw(dim);
    if (map.s) {
        const std::size_t sites[] = {map.d, *map.s};
        const auto joint = marginal_probabilities(state, sites);
        for (std::size_t j = 0; j < dim; ++j)
            raw[j] = joint[j * 2];
    } else {
        const std::size_t sites[] = {map.d};
        raw = marginal_probabilities(state, sites);
    }

    for (std::size_t j = m; j < dim; ++j)
        if (raw[j] > kNormTolerance)
            throw NumericError("probability leaked onto unused index level " + std::to_string(j));

    double accepted = 0.0;
    for (std::size_t j = 0; j < m; ++j)
        accepted += raw[j];
    // |theta_j| < pi keeps every cos^2 term positive, so this cannot vanish.
    if (!(accepted > 0.0))
        throw NumericError("post-selection probability is zero");
    dist.postselect_probability = map.s ? accepted : 1.0;
    dist.probabilities.assign(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(m));
    for (auto &p : dist.probabilities)
        p /= accepted;
    return dist;
}

ShotCounts sample(const IndexDistribution &dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0)
        throw InputError("shots must be >= 1");
    if (dist.probabilities.empty())
        throw InputError("cannot sample an empty distribution");

    const auto m = dist.probabilities.size();
    std::vector<double> cdf(m + 1);
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        acc += dist.probabilities[j] * dist.postselect_probability;
        cdf[j] = acc;
    }
    cdf[m] = 1.0;

    ShotCounts result;
    result.counts.assign(m, 0);
    result.seed = seed;
    std::mt19937_64 engine(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        const auto slot = static_cast<std::size_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (slot >= m) {
            // Either the rejection category or rounding past the last index.
            if (dist.postselect_probability < 1.0)
                ++result.rejected;
            else
                ++result.counts[m - 1];
        } else {
            ++result.counts[slot];
        }
    }
    result.shots = shots - result.rejected;
    return result;
}

Decision decide(const IndexDistribution &dist) {
    Decision decision;
    const auto &p = dist.probabilities;
    if (p.empty())
        return decision;
    const auto best = std::max_element(p.begin(), p.end());
    const double top = *best;
    bool found = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (top - p[j] <= kTieTolerance) {
            if (!found) {
                decision.index = j;
                found = true;
            } else {
                decision.is_tie = true;
            }
        }
    }
    return decision;
}

} // namespace qarn
