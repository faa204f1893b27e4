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

#include "qarn/gates.hpp"

#include <cmath>
#include <numbers>

#include "qarn/error.hpp"

namespace qarn {

namespace {

void require_finite(double theta, const char *what) {
    if (!std::isfinite(theta))
        throw InputError(std::string(what) + ": angle must be finite");
}

void require_dimension(std::size_t d, const char *what) {
    if (d < 2)
        throw InputError(std::string(what) + ": dimension must be >= 2");
}

} // namespace

Gate rx(double theta) {
    require_finite(theta, "rx");
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    Matrix m(2, 2);
    m << Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0);
    return {2, std::move(m), "RX"};
}

Gate hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    Matrix m(2, 2);
    m << h, h, h, -h;
    return {2, std::move(m), "H"};
}

Gate pauli_x(std::size_t d) {
    require_dimension(d, "pauli_x");
    Matrix m = Matrix::Zero(d, d);
    for (std::size_t k = 0; k < d; ++k)
        m((k + 1) % d, k) = 1.0;
    return {d, std::move(m), "X"};
}

Gate fourier(std::size_t d) {
    require_dimension(d, "fourier");
    if (d == 2) {
        auto h = hadamard();
        h.label = "F2";
        return h;
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            // Reduce the exponent first so large d keeps full phase accuracy.
            const double phase = 2.0 * std::numbers::pi * static_cast<double>((j * k) % d) /
                                 static_cast<double>(d);
            m(j, k) = std::polar(scale, phase);
        }
    return {d, std::move(m), "F" + std::to_string(d)};
}

Gate comparison_gate(double theta) {
    require_finite(theta, "comparison_gate");
    Matrix m = Matrix::Identity(8, 8);
    m.block(2, 2, 2, 2) = rx(-theta).matrix;
    m.block(4, 4, 2, 2) = rx(theta).matrix;
    return {8, std::move(m), "CMP"};
}

} // namespace qarn
