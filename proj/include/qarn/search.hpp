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
 * @file search.hpp
 * @brief End-to-end search requests and their text documents.
 *
 * Documents are line-oriented "key=value" text. Blank lines and lines
 * starting with '#' are ignored, whitespace around keys and values is
 * trimmed, lists are comma-separated, booleans are "true"/"false".
 *
 * Request keys:  n, b, a, mode (paper|general|full), shots, seed.
 * Response keys: the request keys, then probabilities, argmax, is_tie,
 *                classical_nearest, classical_distance, tied_indices,
 *                agreement, postselect_probability, and with shots
 *                counts, accepted, rejected. elapsed_seconds is written
 *                only when timing is requested.
 *
 * A response document is also a valid request document: response keys are
 * recognised and skipped by the request parser.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qarn/measurement.hpp"
#include "qarn/oracle.hpp"

namespace qarn {

/// Seed used when shots are requested without one.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct SearchRequest {
    QarnProblem problem;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
};

struct SearchResponse {
    SearchRequest request;
    IndexDistribution distribution;
    Decision decision;
    OracleReport oracle;
    std::optional<ShotCounts> counts;
    double elapsed_seconds = 0.0;
};

SearchResponse search(const SearchRequest &request);

SearchRequest parse_request(std::string_view text);

struct TextOptions {
    bool pretty = false;
    bool timing = false;
};

std::string to_text(const SearchResponse &response, const TextOptions &options = {});

/// Strict unsigned decimal parsing; throws InputError.
std::uint64_t parse_unsigned(std::string_view text);
std::vector<std::uint64_t> parse_value_list(std::string_view text);

/// Fixed check of the three-bit, two-element worked instance: b = 5,
/// a = {2, 6}, run in paper and full-circuit modes.
struct PaperExampleReport {
    IndexDistribution paper;
    IndexDistribution full;
    double max_deviation = 0.0;
    bool ok = false;
};

inline constexpr double kPaperExampleP0 = 0.3647;
inline constexpr double kPaperExampleTolerance = 0.005;
inline constexpr double kModeAgreementTolerance = 1e-10;

PaperExampleReport run_paper_example(const ComparisonOptions &options = {});
std::string to_text(const PaperExampleReport &report);

} // namespace qarn
