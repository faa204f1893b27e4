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
 * @file circuit.hpp
 * @brief Nearest-element search circuits.
 *
 * The search loads every array element into a copy register C, entangled
 * with an index qudit D, then rotates a target qubit about the X axis once
 * per bit position wherever the reference bit and the copied bit differ.
 * Bit k (k = 0 is the most significant) rotates by pi / 2^(k+1), with the
 * sign taken from the sign of (reference bit - element bit), so branch j
 * accumulates the net angle pi (b - a[j]) / 2^n.
 *
 * Canonical site order (row-major amplitude order follows it):
 *
 *   paper       C0 .. C{n-1}, D(dim 2)                 target: D
 *   generalized C0 .. C{n-1}, D(dim max(m,2)), S        target: S
 *   full        B0 .. B{n-1}, A0.0 .. A{m-1}.{n-1}, C0 .. C{n-1}, D, [S]
 *
 * Bit registers list their most significant bit first. The full layout adds
 * S exactly when m != 2, and then uses the generalized post-selection
 * semantics.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qarn/gates.hpp"
#include "qarn/state.hpp"

namespace qarn {

enum class Mode { PaperExact, Generalized, FullCircuit };

std::string_view to_string(Mode mode);
/// Accepts "paper", "general" and "full".
Mode parse_mode(std::string_view text);

/// Default cap on the number of amplitudes a simulated state may hold.
inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 26;
/// Largest supported element width.
inline constexpr unsigned kMaxBits = 62;

struct QarnProblem {
    unsigned n = 0;
    std::vector<std::uint64_t> a;
    std::uint64_t b = 0;
    Mode mode = Mode::Generalized;

    std::size_t m() const { return a.size(); }

    /// Throws InputError when any invariant fails.
    void validate() const;
};

/// Per-bit rotation weights, most significant bit first.
struct RotationSchedule {
    std::vector<double> weights;

    /// Sum over k of (b_k - a_k) * weight_k.
    double net_angle(std::uint64_t b, std::uint64_t a) const;
};

RotationSchedule rotation_schedule(unsigned n);

/// pi (b - a) / 2^n evaluated directly.
double branch_angle(unsigned n, std::uint64_t b, std::uint64_t a);

/// Site indices of a problem's layout.
struct SiteMap {
    std::vector<std::size_t> b;              // full mode only
    std::vector<std::vector<std::size_t>> a; // full mode only, [j][k]
    std::vector<std::size_t> c;
    std::size_t d = 0;
    std::optional<std::size_t> s;
    std::size_t target = 0;
};

/// Whether the layout of @p problem carries a score qubit.
bool uses_score_qubit(const QarnProblem &problem);

RegisterLayout build_layout(const QarnProblem &problem, std::size_t cap = kDefaultStateCap);
SiteMap site_map(const QarnProblem &problem);

struct Operation {
    Gate gate;
    std::vector<Control> controls;
    std::vector<std::size_t> targets;
    /// Rotation angle for rotation gates, for dumps only.
    std::optional<double> angle;
};

struct Circuit {
    RegisterLayout layout;
    std::vector<Operation> operations;
};

/// Knobs for the comparison stage. Production code always uses the default;
/// the unsigned variant reproduces the wrong "all turns in one direction"
/// construction and exists as a negative control for validation checks.
struct ComparisonOptions {
    bool signed_rotation = true;
};

/// Basis state the circuit starts from: all zero, except the B and A wires
/// of the full layout, which hold the classical inputs.
StateVector initial_state(const QarnProblem &problem, std::size_t cap = kDefaultStateCap);

/// Superposition-loading gates: Fourier/Hadamard on D, then controlled X
/// copies of every set bit of every element into C.
Circuit superposition_circuit(const QarnProblem &problem, std::size_t cap = kDefaultStateCap);

/// Gates of the comparison stage, most significant bit first.
std::vector<Operation> comparison_operations(const QarnProblem &problem,
                                             const ComparisonOptions &options = {});

/// Complete circuit for the problem's mode.
Circuit build_circuit(const QarnProblem &problem, const ComparisonOptions &options = {},
                      std::size_t cap = kDefaultStateCap);

/// Complete wire-level circuit; @p problem must be in full-circuit mode.
Circuit build_full_circuit(const QarnProblem &problem, const ComparisonOptions &options = {},
                           std::size_t cap = kDefaultStateCap);

StateVector execute(const Circuit &circuit, StateVector state);
StateVector execute(std::span<const Operation> operations, StateVector state);

StateVector load_superposition(const QarnProblem &problem, std::size_t cap = kDefaultStateCap);

StateVector apply_comparison_stage(StateVector state, const QarnProblem &problem,
                                   const ComparisonOptions &options = {});

StateVector run(const QarnProblem &problem, const ComparisonOptions &options = {},
                std::size_t cap = kDefaultStateCap);

/// Shortest decimal text that parses back to exactly @p v.
std::string format_double(double v);

/// Line-oriented circuit dump. First line "layout <name>:<dim> ...", then one
/// line per operation: "<label> targets=<names> controls=<name>=<digit>,...
/// angle=<radians|->".
std::string to_text(const Circuit &circuit);

} // namespace qarn
