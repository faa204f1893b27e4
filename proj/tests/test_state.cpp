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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "qarn/error.hpp"
#include "qarn/gates.hpp"
#include "qarn/state.hpp"
#include "test_util.hpp"

using namespace qarn;
using qarn::testing::max_abs_diff;

namespace {

RegisterLayout qubits(std::size_t count) {
    std::vector<Site> sites;
    for (std::size_t i = 0; i < count; ++i)
        sites.push_back({Role::CBit, 2, "q" + std::to_string(i)});
    return RegisterLayout(std::move(sites));
}

// C0 C1 C2 D, the paper-mode ancilla.
RegisterLayout ancilla() {
    return RegisterLayout({{Role::CBit, 2, "C0"},
                           {Role::CBit, 2, "C1"},
                           {Role::CBit, 2, "C2"},
                           {Role::DQudit, 2, "D"}});
}

} // namespace

TEST_CASE("layout strides are row-major and flatten/unflatten round-trips") {
    RegisterLayout layout({{Role::CBit, 2, "a"}, {Role::DQudit, 3, "b"}, {Role::Score, 4, "c"}});
    CHECK(layout.total_dimension() == 24);
    CHECK(layout.stride(0) == 12);
    CHECK(layout.stride(1) == 4);
    CHECK(layout.stride(2) == 1);
    for (std::size_t i = 0; i < layout.total_dimension(); ++i)
        CHECK(layout.flatten(layout.unflatten(i)) == i);
    CHECK(layout.find("b") == 1);
    CHECK_FALSE(layout.find("z"));
}

TEST_CASE("layout rejects degenerate sites") {
    CHECK_THROWS_AS(RegisterLayout({{Role::CBit, 1, "x"}}), InputError);
    CHECK_THROWS_AS(RegisterLayout(std::vector<Site>{}), InputError);
}

TEST_CASE("init_basis_state") {
    SUBCASE("single qubit |0>") {
        const std::size_t digits[] = {0};
        auto s = init_basis_state(qubits(1), digits);
        CHECK(s[0] == Complex(1.0));
        CHECK(s[1] == Complex(0.0));
    }
    SUBCASE("two qubits |10> is flat index 2") {
        const std::size_t digits[] = {1, 0};
        auto s = init_basis_state(qubits(2), digits);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(s[i] == Complex(i == 2 ? 1.0 : 0.0));
    }
    SUBCASE("ancilla |000>|0>") {
        const std::size_t digits[] = {0, 0, 0, 0};
        auto s = init_basis_state(ancilla(), digits);
        CHECK(s.size() == 16);
        CHECK(s[0] == Complex(1.0));
        CHECK(s.norm_squared() == doctest::Approx(1.0));
    }
    SUBCASE("errors") {
        const std::size_t too_big[] = {2};
        const std::size_t too_many[] = {0, 0};
        CHECK_THROWS_AS(init_basis_state(qubits(1), too_big), InputError);
        CHECK_THROWS_AS(init_basis_state(qubits(1), too_many), InputError);
    }
}

TEST_CASE("apply_controlled examples") {
    const auto layout = ancilla();
    const double h = 1.0 / std::sqrt(2.0);

    SUBCASE("identity leaves the state alone") {
        std::mt19937_64 rng(1);
        auto s = qarn::testing::random_state(layout, rng);
        auto t = apply_controlled(s, {}, 2, Matrix::Identity(2, 2));
        CHECK(max_abs_diff(s.amplitudes(), t.amplitudes()) == 0.0);
    }

    SUBCASE("X controlled on D = 1 flips only that branch") {
        auto s = apply_controlled(StateVector(layout), {}, 3, hadamard().matrix);
        const Control on_d1[] = {{3, 1}};
        s = apply_controlled(std::move(s), on_d1, 1, pauli_x(2).matrix);
        // (|000>|0> + |010>|1>) / sqrt(2)
        std::vector<Complex> expected(16);
        expected[0b0000] = h;
        expected[0b0101] = h;
        CHECK(max_abs_diff(s.amplitudes(), expected) < 1e-15);
    }

    SUBCASE("valued controls reproduce the -i sin block of the comparison matrix") {
        RegisterLayout bcd({{Role::BBit, 2, "B"}, {Role::CBit, 2, "C"}, {Role::DQudit, 2, "D"}});
        const double theta = std::numbers::pi / 4;
        const Control ctl[] = {{0, 1}, {1, 0}};
        const auto expected = comparison_gate(theta).matrix;
        for (std::size_t col = 0; col < 8; ++col) {
            std::vector<Complex> basis(8);
            basis[col] = 1.0;
            auto s = apply_controlled(StateVector(bcd, basis), ctl, 2, rx(theta).matrix);
            // Columns 2 and 3 belong to the (0,1) block, which this single
            // controlled rotation does not implement.
            if (col == 2 || col == 3)
                continue;
            for (std::size_t row = 0; row < 8; ++row)
                CHECK(std::abs(s[row] - expected(row, col)) < 1e-15);
        }
    }

    SUBCASE("errors") {
        StateVector s(layout);
        Matrix bad(2, 2);
        bad << 1, 1, 0, 1;
        CHECK_THROWS_AS(apply_controlled(s, {}, 0, bad), InputError);
        const Control overlap[] = {{0, 1}};
        CHECK_THROWS_AS(apply_controlled(s, overlap, 0, pauli_x(2).matrix), InputError);
        const Control dup[] = {{1, 1}, {1, 0}};
        CHECK_THROWS_AS(apply_controlled(s, dup, 0, pauli_x(2).matrix), InputError);
        const Control digit[] = {{1, 2}};
        CHECK_THROWS_AS(apply_controlled(s, digit, 0, pauli_x(2).matrix), InputError);
        CHECK_THROWS_AS(apply_controlled(s, {}, 0, pauli_x(3).matrix), InputError);
        CHECK_THROWS_AS(apply_controlled(s, {}, 9, pauli_x(2).matrix), InputError);
    }
}

TEST_CASE("marginal_probabilities") {
    const auto layout = ancilla();
    const std::size_t d_site[] = {3};

    auto zero = StateVector(layout);
    auto p = marginal_probabilities(zero, d_site);
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(0.0));

    const double h = 1.0 / std::sqrt(2.0);
    std::vector<Complex> amps(16);
    amps[0b0100] = h; // |010>|0>
    amps[0b1101] = h; // |110>|1>
    p = marginal_probabilities(StateVector(layout, amps), d_site);
    CHECK(p[0] == doctest::Approx(0.5));
    CHECK(p[1] == doctest::Approx(0.5));

    const std::size_t cd[] = {1, 3};
    p = marginal_probabilities(StateVector(layout, amps), cd);
    REQUIRE(p.size() == 4);
    CHECK(p[0b10] == doctest::Approx(0.5)); // C1 = 1, D = 0
    CHECK(p[0b11] == doctest::Approx(0.5));

    const std::size_t unknown[] = {7};
    CHECK_THROWS_AS(marginal_probabilities(zero, unknown), InputError);
    CHECK_THROWS_AS(marginal_probabilities(zero, {}), InputError);
}

TEST_CASE("inner_product") {
    const auto layout = qubits(1);
    const std::size_t zero_d[] = {0};
    const std::size_t one_d[] = {1};
    auto zero = init_basis_state(layout, zero_d);
    auto one = init_basis_state(layout, one_d);
    auto plus = apply_controlled(zero, {}, 0, hadamard().matrix);
    CHECK(std::abs(inner_product(zero, one)) == 0.0);
    CHECK(std::abs(inner_product(zero, plus) - 1.0 / std::sqrt(2.0)) < 1e-15);

    std::mt19937_64 rng(3);
    auto r = qarn::testing::random_state(ancilla(), rng);
    CHECK(std::abs(inner_product(r, r) - 1.0) < 1e-12);
    CHECK_THROWS_AS(inner_product(zero, r), InputError);

    // Conjugate-linear in the first argument.
    auto s = apply_controlled(zero, {}, 0, rx(0.7).matrix);
    const auto ab = inner_product(plus, s);
    const auto ba = inner_product(s, plus);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-15);
}

TEST_CASE("property: kernel matches the dense operator on random mixed-radix layouts") {
    std::mt19937_64 rng(20261018);
    for (int trial = 0; trial < 200; ++trial) {
        const auto layout = qarn::testing::random_layout(rng);
        std::vector<std::size_t> order(layout.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);

        std::uniform_int_distribution<std::size_t> pick(1, std::min<std::size_t>(2, layout.size()));
        const auto ntargets = pick(rng);
        std::vector<std::size_t> targets(order.begin(), order.begin() + ntargets);
        std::vector<Control> controls;
        for (std::size_t i = ntargets; i < order.size(); ++i)
            if (rng() % 2)
                controls.push_back({order[i], rng() % layout.dimension(order[i])});

        std::size_t block = 1;
        for (auto t : targets)
            block *= layout.dimension(t);
        const auto u = qarn::testing::random_unitary(block, rng);
        const auto in = qarn::testing::random_state(layout, rng);
        const auto expected =
            qarn::testing::dense_reference(layout, in.amplitudes(), controls, targets, u);
        const auto out = apply_unitary(in, controls, targets, u);
        CHECK(max_abs_diff(out.amplitudes(), expected) < 1e-12);
    }
}

TEST_CASE("property: norm is preserved by long random gate sequences") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto layout = qarn::testing::random_layout(rng, 5, 3);
        auto s = qarn::testing::random_state(layout, rng);
        for (int g = 0; g < 100; ++g) {
            const std::size_t target = rng() % layout.size();
            std::vector<Control> controls;
            for (std::size_t i = 0; i < layout.size(); ++i)
                if (i != target && rng() % 3 == 0)
                    controls.push_back({i, rng() % layout.dimension(i)});
            const auto u = qarn::testing::random_unitary(layout.dimension(target), rng);
            s = apply_controlled(std::move(s), controls, target, u);
        }
        CHECK(std::abs(s.norm_squared() - 1.0) <= 1e-10);
    }
}

TEST_CASE("property: shift on site k increments that digit mod its dimension") {
    RegisterLayout layout({{Role::CBit, 2, "a"}, {Role::DQudit, 3, "b"}, {Role::Score, 5, "c"}});
    for (std::size_t i = 0; i < layout.total_dimension(); ++i) {
        const auto digits = layout.unflatten(i);
        for (std::size_t k = 0; k < layout.size(); ++k) {
            auto s = init_basis_state(layout, digits);
            s = apply_controlled(std::move(s), {}, k, pauli_x(layout.dimension(k)).matrix);
            auto shifted = digits;
            shifted[k] = (shifted[k] + 1) % layout.dimension(k);
            CHECK(std::abs(s[layout.flatten(shifted)] - 1.0) < 1e-15);
        }
    }
}

TEST_CASE("property: linearity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto layout = qarn::testing::random_layout(rng);
        const auto a = qarn::testing::random_amplitudes(layout.total_dimension(), rng);
        const auto b = qarn::testing::random_amplitudes(layout.total_dimension(), rng);
        const Complex alpha(0.3, -0.8), beta(-1.1, 0.25);
        std::vector<Complex> mix(a.size());
        double norm = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            mix[i] = alpha * a[i] + beta * b[i];
            norm += std::norm(mix[i]);
        }
        norm = std::sqrt(norm);
        for (auto &x : mix)
            x /= norm;

        const std::size_t target = rng() % layout.size();
        const auto u = qarn::testing::random_unitary(layout.dimension(target), rng);
        const auto ua = apply_controlled(StateVector(layout, a), {}, target, u);
        const auto ub = apply_controlled(StateVector(layout, b), {}, target, u);
        const auto umix = apply_controlled(StateVector(layout, mix), {}, target, u);
        std::vector<Complex> combined(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            combined[i] = (alpha * ua[i] + beta * ub[i]) / norm;
        CHECK(max_abs_diff(umix.amplitudes(), combined) < 1e-12);
    }
}

TEST_CASE("property: commuting gates on disjoint controls commute") {
    std::mt19937_64 rng(11);
    RegisterLayout layout({{Role::CBit, 2, "c0"}, {Role::CBit, 2, "c1"}, {Role::DQudit, 3, "d"},
                           {Role::Score, 2, "s"}});
    for (int trial = 0; trial < 50; ++trial) {
        const double t1 = std::uniform_real_distribution<double>(-3, 3)(rng);
        const double t2 = std::uniform_real_distribution<double>(-3, 3)(rng);
        const Control c1[] = {{0, rng() % 2}};
        const Control c2[] = {{1, rng() % 2}, {2, rng() % 3}};
        const auto s = qarn::testing::random_state(layout, rng);
        auto x = apply_controlled(apply_controlled(s, c1, 3, rx(t1).matrix), c2, 3, rx(t2).matrix);
        auto y = apply_controlled(apply_controlled(s, c2, 3, rx(t2).matrix), c1, 3, rx(t1).matrix);
        CHECK(max_abs_diff(x.amplitudes(), y.amplitudes()) < 1e-12);
    }
}

TEST_CASE("valued control equals the X-sandwich idiom") {
    std::mt19937_64 rng(17);
    const auto layout = qubits(3);
    const auto x = pauli_x(2).matrix;
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = qarn::testing::random_state(layout, rng);
        const Control negative[] = {{0, 0}, {1, 1}};
        const Control positive[] = {{0, 1}, {1, 1}};
        const auto native = apply_controlled(s, negative, 2, x);
        auto sandwich = apply_controlled(s, {}, 0, x);
        sandwich = apply_controlled(std::move(sandwich), positive, 2, x);
        sandwich = apply_controlled(std::move(sandwich), {}, 0, x);
        CHECK(max_abs_diff(native.amplitudes(), sandwich.amplitudes()) < 1e-15);
    }
}
