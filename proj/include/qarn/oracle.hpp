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

/**
 * @file oracle.hpp
 * @brief Classical ground truth for the search circuits.
 *
 * Nothing here touches the state-vector simulator except agreement_sweep,
 * which runs the simulator and compares its decision to the classical scan.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qarn/measurement.hpp"

namespace qarn {

struct OracleReport {
    std::size_t nearest_index = 0;
    std::uint64_t distance = 0;
    std::vector<std::size_t> tied_indices;
    /// Set by compare_with(); false until then.
    bool agreement = false;
};

/// Linear scan with exact integer distances; lowest minimizing index wins.
OracleReport classical_nearest(std::span<const std::uint64_t> a, std::uint64_t b);

/// Fills in report.agreement. With a unique minimum the decision must equal
/// the nearest index; with ties it must be any of the tied indices.
void compare_with(OracleReport &report, const Decision &decision);

/// P(1) = [cos^2(t1/2) + sin^2(t0/2)] / 2, t_j = pi (b - a[j]) / 2^n.
IndexDistribution closed_form_paper(std::span<const std::uint64_t> a, std::uint64_t b,
                                    unsigned n);

/// P(j | S = 0) = cos^2(t_j/2) / sum_i cos^2(t_i/2); P(S = 0) = sum_i cos^2(t_i/2) / m.
IndexDistribution closed_form_generalized(std::span<const std::uint64_t> a, std::uint64_t b,
                                          unsigned n);

struct AgreementTally {
    std::uint64_t instances = 0;
    std::uint64_t unique = 0;          // instances with a unique minimum distance
    std::uint64_t unique_agree = 0;    // ... where decide() picked it
    std::uint64_t ties = 0;            // instances with a tied minimum
    std::uint64_t tie_min_attained = 0; // ... where decide() picked a minimizer

    void add(const AgreementTally &other);
    double agreement_rate() const;
};

/// Simulates one instance and tallies it.
AgreementTally tally_instance(const QarnProblem &problem);

struct SweepRow {
    Mode mode;
    unsigned n;
    std::size_t m;
    AgreementTally tally;
};

/// Random instances per (mode, n, m) for n in [1, n_max] and m in [1, m_max];
/// paper-exact rows are produced for m = 2 only. Instance values come from
/// std::mt19937_64 seeded per row with seed + 0x9E3779B97F4A7C15 * (1000 n + m),
/// reduced to [0, 2^n) by masking. Rows run on a worker pool; the order of the
/// result is fixed.
std::vector<SweepRow> agreement_sweep(unsigned n_max, std::size_t m_max, std::uint64_t count,
                                      std::uint64_t seed);

/// Comma-separated table with a header line.
std::string to_csv(std::span<const SweepRow> rows);

} // namespace qarn
