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

#include "qarn/circuit.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qarn/error.hpp"

namespace qarn {

namespace {

constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

unsigned bit(std::uint64_t value, unsigned n, unsigned k) {
    return static_cast<unsigned>((value >> (n - 1 - k)) & 1u);
}

std::size_t index_dimension(const QarnProblem &p) {
    return p.mode == Mode::PaperExact ? 2 : std::max<std::size_t>(p.m(), 2);
}

/// Multiplies @p total by 2^bits * extra, throwing once it passes @p cap.
void grow(std::size_t &total, std::size_t factor, std::size_t cap) {
    if (factor != 0 && total > cap / factor)
        throw CapacityError("state would exceed the cap of " + std::to_string(cap) +
                            " amplitudes");
    total *= factor;
}

void check_capacity(const QarnProblem &p, std::size_t cap) {
    std::size_t qubits = p.n; // C register
    if (p.mode == Mode::FullCircuit)
        qubits += p.n * (p.m() + 1);
    std::size_t total = 1;
    for (std::size_t q = 0; q < qubits; ++q)
        grow(total, 2, cap);
    grow(total, index_dimension(p), cap);
    if (uses_score_qubit(p))
        grow(total, 2, cap);
}

Matrix unsigned_comparison_matrix(double theta) {
    Matrix m = Matrix::Identity(8, 8);
    m.block(2, 2, 2, 2) = rx(theta).matrix;
    m.block(4, 4, 2, 2) = rx(theta).matrix;
    return m;
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

std::string_view to_string(Mode mode) {
    switch (mode) {
    case Mode::PaperExact:
        return "paper";
    case Mode::Generalized:
        return "general";
    case Mode::FullCircuit:
        return "full";
    }
    return "?";
}

Mode parse_mode(std::string_view text) {
    if (text == "paper")
        return Mode::PaperExact;
    if (text == "general")
        return Mode::Generalized;
    if (text == "full")
        return Mode::FullCircuit;
    throw InputError("unknown mode '" + std::string(text) + "' (expected paper|general|full)");
}

void QarnProblem::validate() const {
    if (n < 1 || n > kMaxBits)
        throw InputError("bit width must be in [1, " + std::to_string(kMaxBits) + "]");
    if (a.empty())
        throw InputError("array must contain at least one element");
    const std::uint64_t limit = std::uint64_t{1} << n;
    if (b >= limit)
        throw InputError("reference value " + std::to_string(b) + " does not fit in " +
                         std::to_string(n) + " bits");
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] >= limit)
            throw InputError("element " + std::to_string(j) + " = " + std::to_string(a[j]) +
                             " does not fit in " + std::to_string(n) + " bits");
    if (mode == Mode::PaperExact && a.size() != 2)
        throw InputError("paper mode requires exactly two elements");
}

double RotationSchedule::net_angle(std::uint64_t b, std::uint64_t a) const {
    const auto n = static_cast<unsigned>(weights.size());
    double angle = 0.0;
    for (unsigned k = 0; k < n; ++k)
        angle += (static_cast<double>(bit(b, n, k)) - static_cast<double>(bit(a, n, k))) *
                 weights[k];
    return angle;
}

RotationSchedule rotation_schedule(unsigned n) {
    if (n < 1)
        throw InputError("rotation schedule needs n >= 1");
    RotationSchedule schedule;
    double w = std::numbers::pi / 2;
    for (unsigned k = 0; k < n; ++k, w /= 2)
        schedule.weights.push_back(w);
    return schedule;
}

double branch_angle(unsigned n, std::uint64_t b, std::uint64_t a) {
    const double diff = static_cast<double>(b) - static_cast<double>(a);
    return std::numbers::pi * std::ldexp(diff, -static_cast<int>(n));
}

bool uses_score_qubit(const QarnProblem &problem) {
    switch (problem.mode) {
    case Mode::PaperExact:
        return false;
    case Mode::Generalized:
        return true;
    case Mode::FullCircuit:
        return problem.m() != 2;
    }
    return false;
}

RegisterLayout build_layout(const QarnProblem &problem, std::size_t cap) {
    problem.validate();
    check_capacity(problem, cap);

    const auto n = problem.n;
    std::vector<Site> sites;
    if (problem.mode == Mode::FullCircuit) {
        for (unsigned k = 0; k < n; ++k)
            sites.push_back({Role::BBit, 2, "B" + std::to_string(k)});
        for (std::size_t j = 0; j < problem.m(); ++j)
            for (unsigned k = 0; k < n; ++k)
                sites.push_back(
                    {Role::ABit, 2, "A" + std::to_string(j) + "." + std::to_string(k)});
    }
    for (unsigned k = 0; k < n; ++k)
        sites.push_back({Role::CBit, 2, "C" + std::to_string(k)});
    sites.push_back({Role::DQudit, index_dimension(problem), "D"});
    if (uses_score_qubit(problem))
        sites.push_back({Role::Score, 2, "S"});
    return RegisterLayout(std::move(sites));
}

SiteMap site_map(const QarnProblem &problem) {
    problem.validate();
    const auto n = problem.n;
    SiteMap map;
    std::size_t next = 0;
    if (problem.mode == Mode::FullCircuit) {
        for (unsigned k = 0; k < n; ++k)
            map.b.push_back(next++);
        map.a.resize(problem.m());
        for (auto &row : map.a)
            for (unsigned k = 0; k < n; ++k)
                row.push_back(next++);
    }
    for (unsigned k = 0; k < n; ++k)
        map.c.push_back(next++);
    map.d = next++;
    if (uses_score_qubit(problem))
        map.s = next++;
    map.target = map.s ? *map.s : map.d;
    return map;
}

StateVector initial_state(const QarnProblem &problem, std::size_t cap) {
    const auto layout = build_layout(problem, cap);
    const auto map = site_map(problem);
    std::vector<std::size_t> digits(layout.size(), 0);
    if (problem.mode == Mode::FullCircuit) {
        for (unsigned k = 0; k < problem.n; ++k) {
            digits[map.b[k]] = bit(problem.b, problem.n, k);
            for (std::size_t j = 0; j < problem.m(); ++j)
                digits[map.a[j][k]] = bit(problem.a[j], problem.n, k);
        }
    }
    return init_basis_state(layout, digits);
}

Circuit superposition_circuit(const QarnProblem &problem, std::size_t cap) {
    Circuit circuit{build_layout(problem, cap), {}};
    const auto map = site_map(problem);
    const auto n = problem.n;
    const auto m = problem.m();

    // A single element needs no superposition: D stays at |0>.
    if (m >= 2) {
        const auto dim = circuit.layout.dimension(map.d);
        circuit.operations.push_back({fourier(dim), {}, {map.d}, std::nullopt});
    }
    for (std::size_t j = 0; j < m; ++j) {
        for (unsigned k = 0; k < n; ++k) {
            if (bit(problem.a[j], n, k) == 0)
                continue;
            std::vector<Control> controls{{map.d, j}};
            if (problem.mode == Mode::FullCircuit)
                controls.push_back({map.a[j][k], 1});
            circuit.operations.push_back({pauli_x(2), std::move(controls), {map.c[k]}, std::nullopt});
        }
    }
    return circuit;
}

std::vector<Operation> comparison_operations(const QarnProblem &problem,
                                             const ComparisonOptions &options) {
    const auto map = site_map(problem);
    const auto schedule = rotation_schedule(problem.n);
    const auto n = problem.n;
    std::vector<Operation> ops;
    for (unsigned k = 0; k < n; ++k) {
        const auto bk = bit(problem.b, n, k);
        bool any_differs = false;
        for (auto v : problem.a)
            any_differs = any_differs || bit(v, n, k) != bk;
        // Every branch agrees with B on this bit: the gate is the identity.
        if (!any_differs)
            continue;

        const double w = schedule.weights[k];
        if (problem.mode == Mode::FullCircuit) {
            Gate gate = options.signed_rotation
                            ? comparison_gate(w)
                            : Gate{8, unsigned_comparison_matrix(w), "CMP-UNSIGNED"};
            ops.push_back({std::move(gate), {}, {map.b[k], map.c[k], map.target}, w});
        } else {
            // B is classical: keep only the half of the comparison gate that
            // its bit selects, controlled on the opposite C value.
            const double angle = (!options.signed_rotation || bk == 1) ? w : -w;
            ops.push_back({rx(angle), {{map.c[k], 1u - bk}}, {map.target}, angle});
        }
    }
    return ops;
}

Circuit build_circuit(const QarnProblem &problem, const ComparisonOptions &options,
                      std::size_t cap) {
    auto circuit = superposition_circuit(problem, cap);
    for (auto &op : comparison_operations(problem, options))
        circuit.operations.push_back(std::move(op));
    return circuit;
}

Circuit build_full_circuit(const QarnProblem &problem, const ComparisonOptions &options,
                           std::size_t cap) {
    if (problem.mode != Mode::FullCircuit)
        throw InputError("build_full_circuit requires full-circuit mode");
    return build_circuit(problem, options, cap);
}

StateVector execute(std::span<const Operation> operations, StateVector state) {
    for (const auto &op : operations)
        state.apply(op.controls, op.targets, op.gate.matrix);
    return state;
}

StateVector execute(const Circuit &circuit, StateVector state) {
    if (!(state.layout() == circuit.layout))
        throw InputError("state layout does not match circuit layout");
    return execute(circuit.operations, std::move(state));
}

StateVector load_superposition(const QarnProblem &problem, std::size_t cap) {
    return execute(superposition_circuit(problem, cap), initial_state(problem, cap));
}

StateVector apply_comparison_stage(StateVector state, const QarnProblem &problem,
                                   const ComparisonOptions &options) {
    if (!(state.layout() == build_layout(problem, kUnlimited)))
        throw InputError("state layout does not match the problem's " +
                         std::string(to_string(problem.mode)) + " layout");
    return execute(comparison_operations(problem, options), std::move(state));
}

StateVector run(const QarnProblem &problem, const ComparisonOptions &options, std::size_t cap) {
    return execute(build_circuit(problem, options, cap), initial_state(problem, cap));
}

std::string to_text(const Circuit &circuit) {
    std::ostringstream out;
    const auto &layout = circuit.layout;
    out << "layout";
    for (const auto &site : layout.sites())
        out << ' ' << site.name << ':' << site.dimension;
    out << '\n';
    for (const auto &op : circuit.operations) {
        out << op.gate.label << " targets=";
        for (std::size_t i = 0; i < op.targets.size(); ++i)
            out << (i ? "," : "") << layout.site(op.targets[i]).name;
        out << " controls=";
        if (op.controls.empty())
            out << '-';
        for (std::size_t i = 0; i < op.controls.size(); ++i)
            out << (i ? "," : "") << layout.site(op.controls[i].site).name << '='
                << op.controls[i].value;
        out << " angle=";
        if (op.angle)
            out << format_double(*op.angle);
        else
            out << '-';
        out << '\n';
    }
    return out.str();
}

} // namespace qarn
