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

#include "qarn/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qarn/error.hpp"

namespace qarn {

std::string_view to_string(Role role) {
    switch (role) {
    case Role::BBit:
        return "B-bit";
    case Role::ABit:
        return "A-bit";
    case Role::CBit:
        return "C-bit";
    case Role::DQudit:
        return "D-qudit";
    case Role::Score:
        return "S-score";
    }
    return "?";
}

RegisterLayout::RegisterLayout(std::vector<Site> sites) : sites_(std::move(sites)) {
    if (sites_.empty())
        throw InputError("layout must contain at least one site");
    strides_.assign(sites_.size(), 1);
    total_ = 1;
    for (std::size_t i = sites_.size(); i-- > 0;) {
        const auto dim = sites_[i].dimension;
        if (dim < 2)
            throw InputError("site '" + sites_[i].name + "' has dimension < 2");
        strides_[i] = total_;
        if (total_ > std::numeric_limits<std::size_t>::max() / dim)
            throw CapacityError("layout dimension overflows size_t");
        total_ *= dim;
    }
}

std::size_t RegisterLayout::flatten(std::span<const std::size_t> digits) const {
    if (digits.size() != sites_.size())
        throw InputError("digit count " + std::to_string(digits.size()) +
                         " does not match site count " + std::to_string(sites_.size()));
    std::size_t index = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= sites_[i].dimension)
            throw InputError("digit " + std::to_string(digits[i]) + " out of range for site '" +
                             sites_[i].name + "'");
        index += digits[i] * strides_[i];
    }
    return index;
}

std::vector<std::size_t> RegisterLayout::unflatten(std::size_t index) const {
    if (index >= total_)
        throw InputError("flat index out of range");
    std::vector<std::size_t> digits(sites_.size());
    for (std::size_t i = 0; i < sites_.size(); ++i)
        digits[i] = digit(index, i);
    return digits;
}

std::optional<std::size_t> RegisterLayout::find(std::string_view name) const {
    for (std::size_t i = 0; i < sites_.size(); ++i)
        if (sites_[i].name == name)
            return i;
    return std::nullopt;
}

StateVector::StateVector(RegisterLayout layout)
    : layout_(std::move(layout)), amplitudes_(layout_.total_dimension()) {
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(RegisterLayout layout, std::vector<Complex> amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != layout_.total_dimension())
        throw InputError("amplitude count does not match layout dimension");
    if (std::abs(norm_squared() - 1.0) > kNormTolerance)
        throw InputError("amplitudes are not unit norm");
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    for (const auto &a : amplitudes_)
        sum += std::norm(a);
    return sum;
}

double unitarity_error(const Matrix &matrix) {
    if (matrix.rows() != matrix.cols())
        return std::numeric_limits<double>::infinity();
    const Matrix product = matrix * matrix.adjoint();
    const Matrix diff = product - Matrix::Identity(matrix.rows(), matrix.cols());
    return diff.cwiseAbs().maxCoeff();
}

void StateVector::apply(std::span<const Control> controls, std::span<const std::size_t> targets,
                        const Matrix &matrix) {
    const auto nsites = layout_.size();
    if (targets.empty())
        throw InputError("gate needs at least one target site");

    std::vector<char> used(nsites, 0);
    std::size_t block = 1;
    for (auto t : targets) {
        if (t >= nsites)
            throw InputError("target site index out of range");
        if (used[t])
            throw InputError("target sites must be distinct");
        used[t] = 1;
        block *= layout_.dimension(t);
    }
    for (const auto &c : controls) {
        if (c.site >= nsites)
            throw InputError("control site index out of range");
        if (used[c.site])
            throw InputError("control site '" + layout_.site(c.site).name +
                             "' overlaps another control or the target");
        if (c.value >= layout_.dimension(c.site))
            throw InputError("control digit out of range for site '" +
                             layout_.site(c.site).name + "'");
        used[c.site] = 1;
    }
    if (static_cast<std::size_t>(matrix.rows()) != block ||
        static_cast<std::size_t>(matrix.cols()) != block)
        throw InputError("matrix dimension " + std::to_string(matrix.rows()) +
                         " does not match target dimension " + std::to_string(block));
    if (!matrix.allFinite() || unitarity_error(matrix) > kUnitaryTolerance)
        throw InputError("matrix is not unitary");

    // Offsets of each target sub-basis state relative to a group base index,
    // row-major over the target list.
    std::vector<std::size_t> offsets(block, 0);
    for (std::size_t k = 0; k < block; ++k) {
        std::size_t rem = k;
        std::size_t off = 0;
        for (std::size_t t = targets.size(); t-- > 0;) {
            const auto dim = layout_.dimension(targets[t]);
            off += (rem % dim) * layout_.stride(targets[t]);
            rem /= dim;
        }
        offsets[k] = off;
    }

    // Odometer over the digits of the non-target sites; controls are checked
    // per group against the current digits.
    std::vector<std::size_t> outer;
    for (std::size_t s = 0; s < nsites; ++s)
        if (std::find(targets.begin(), targets.end(), s) == targets.end())
            outer.push_back(s);
    std::vector<std::size_t> digits(nsites, 0);

    std::vector<Complex> in(block);
    std::size_t base = 0;
    while (true) {
        bool fire = true;
        for (const auto &c : controls)
            if (digits[c.site] != c.value) {
                fire = false;
                break;
            }
        if (fire) {
            for (std::size_t k = 0; k < block; ++k)
                in[k] = amplitudes_[base + offsets[k]];
            for (std::size_t r = 0; r < block; ++r) {
                Complex acc = 0.0;
                for (std::size_t k = 0; k < block; ++k)
                    acc += matrix(r, k) * in[k];
                amplitudes_[base + offsets[r]] = acc;
            }
        }

        std::size_t pos = outer.size();
        while (pos > 0) {
            const auto s = outer[pos - 1];
            if (++digits[s] < layout_.dimension(s)) {
                base += layout_.stride(s);
                break;
            }
            base -= (digits[s] - 1) * layout_.stride(s);
            digits[s] = 0;
            --pos;
        }
        if (pos == 0)
            break;
    }

    const double drift = std::abs(norm_squared() - 1.0);
    if (!(drift <= kNormTolerance))
        throw NumericError("norm drift " + std::to_string(drift) + " after gate application");
}

StateVector init_basis_state(const RegisterLayout &layout, std::span<const std::size_t> digits) {
    const auto index = layout.flatten(digits);
    std::vector<Complex> amps(layout.total_dimension());
    amps[index] = 1.0;
    return StateVector(layout, std::move(amps));
}

StateVector apply_controlled(StateVector state, std::span<const Control> controls,
                             std::size_t target, const Matrix &matrix) {
    const std::size_t targets[] = {target};
    state.apply(controls, targets, matrix);
    return state;
}

StateVector apply_unitary(StateVector state, std::span<const Control> controls,
                          std::span<const std::size_t> targets, const Matrix &matrix) {
    state.apply(controls, targets, matrix);
    return state;
}

std::vector<double> marginal_probabilities(const StateVector &state,
                                           std::span<const std::size_t> sites) {
    const auto &layout = state.layout();
    if (sites.empty())
        throw InputError("marginal needs at least one site");
    std::size_t table = 1;
    for (auto s : sites) {
        if (s >= layout.size())
            throw InputError("unknown site index " + std::to_string(s));
        table *= layout.dimension(s);
    }
    std::vector<double> probs(table, 0.0);
    for (std::size_t i = 0; i < state.size(); ++i) {
        std::size_t key = 0;
        for (auto s : sites)
            key = key * layout.dimension(s) + layout.digit(i, s);
        probs[key] += std::norm(state[i]);
    }
    return probs;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (!(a.layout() == b.layout()))
        throw InputError("inner product of states with different layouts");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += std::conj(a[i]) * b[i];
    return acc;
}

} // namespace qarn
