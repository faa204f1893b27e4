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
 * @file state.hpp
 * @brief Dense state vectors over mixed-radix registers.
 *
 * A RegisterLayout is an ordered list of sites, each a qubit or qudit with
 * its own dimension. Amplitudes are stored row-major over that list: the last
 * site has stride 1, and the stride of site i is the product of the
 * dimensions of every site after it.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qarn {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Norm drift tolerated after any operation before a NumericError is raised.
inline constexpr double kNormTolerance = 1e-10;
/// Unitarity tolerance applied to matrices handed to the kernels.
inline constexpr double kUnitaryTolerance = 1e-10;

enum class Role { BBit, ABit, CBit, DQudit, Score };

std::string_view to_string(Role role);

struct Site {
    Role role;
    std::size_t dimension;
    std::string name;

    bool operator==(const Site &) const = default;
};

class RegisterLayout {
  public:
    RegisterLayout() = default;
    explicit RegisterLayout(std::vector<Site> sites);

    std::size_t size() const { return sites_.size(); }
    const Site &site(std::size_t i) const { return sites_.at(i); }
    const std::vector<Site> &sites() const { return sites_; }
    std::size_t total_dimension() const { return total_; }
    std::size_t stride(std::size_t i) const { return strides_.at(i); }
    std::size_t dimension(std::size_t i) const { return sites_.at(i).dimension; }

    std::size_t flatten(std::span<const std::size_t> digits) const;
    std::vector<std::size_t> unflatten(std::size_t index) const;
    /// Digit of site @p site within flat index @p index.
    std::size_t digit(std::size_t index, std::size_t site) const {
        return (index / strides_[site]) % sites_[site].dimension;
    }

    std::optional<std::size_t> find(std::string_view name) const;

    bool operator==(const RegisterLayout &other) const { return sites_ == other.sites_; }

  private:
    std::vector<Site> sites_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
};

/// A (site, required digit) pair. The gate fires only when every control
/// site holds its required digit, so negative controls need no X sandwich.
struct Control {
    std::size_t site;
    std::size_t value;

    bool operator==(const Control &) const = default;
};

class StateVector {
  public:
    /// Basis state |0...0>.
    explicit StateVector(RegisterLayout layout);
    /// Takes ownership of @p amplitudes; throws if the length or norm is off.
    StateVector(RegisterLayout layout, std::vector<Complex> amplitudes);

    const RegisterLayout &layout() const { return layout_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }
    std::size_t size() const { return amplitudes_.size(); }

    double norm_squared() const;

    /// In-place application of a controlled unitary acting jointly on
    /// @p targets (row-major over the target list). Raises InputError on bad
    /// arguments and NumericError when the norm drifts.
    void apply(std::span<const Control> controls, std::span<const std::size_t> targets,
               const Matrix &matrix);

  private:
    RegisterLayout layout_;
    std::vector<Complex> amplitudes_;
};

StateVector init_basis_state(const RegisterLayout &layout, std::span<const std::size_t> digits);

StateVector apply_controlled(StateVector state, std::span<const Control> controls,
                             std::size_t target, const Matrix &matrix);

/// Multi-site variant of apply_controlled used for composite gates.
StateVector apply_unitary(StateVector state, std::span<const Control> controls,
                          std::span<const std::size_t> targets, const Matrix &matrix);

/// Probability table over the digit tuples of @p sites, flattened row-major
/// in the order the sites are given.
std::vector<double> marginal_probabilities(const StateVector &state,
                                           std::span<const std::size_t> sites);

/// <a|b>, conjugate-linear in @p a.
Complex inner_product(const StateVector &a, const StateVector &b);

/// max |(M M^dagger - I)_ij|
double unitarity_error(const Matrix &matrix);

} // namespace qarn
