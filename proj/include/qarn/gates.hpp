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

#include <string>

#include "qarn/state.hpp"

namespace qarn {

/// An explicit unitary with a label for circuit dumps.
struct Gate {
    std::size_t dimension = 0;
    Matrix matrix;
    std::string label;
};

/// X-axis rotation: cos(theta/2) on the diagonal, -i sin(theta/2) off it.
Gate rx(double theta);

Gate hadamard();

/// Bit flip for d = 2, cyclic shift |k> -> |k+1 mod d> otherwise.
Gate pauli_x(std::size_t d);

/// Discrete Fourier matrix, entries w^{jk}/sqrt(d) with w = exp(2 pi i / d).
Gate fourier(std::size_t d);

/// Composite 8x8 gate over (B-bit, C-bit, target), row-major in that order.
///
/// Identity when the two control bits agree, rx(+theta) on the target when
/// (B, C) = (1, 0) and rx(-theta) when (B, C) = (0, 1). The sign of the
/// bitwise difference therefore picks the rotation direction.
Gate comparison_gate(double theta);

} // namespace qarn
