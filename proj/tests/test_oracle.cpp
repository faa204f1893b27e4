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
#include <random>

#include "qarn/error.hpp"
#include "qarn/oracle.hpp"

using namespace qarn;

TEST_CASE("classical_nearest") {
    const std::uint64_t a1[] = {2, 6};
    auto r = classical_nearest(a1, 5);
    CHECK(r.nearest_index == 1);
    CHECK(r.distance == 1);
    CHECK(r.tied_indices == std::vector<std::size_t>{1});

    const std::uint64_t a2[] = {7};
    r = classical_nearest(a2, 7);
    CHECK(r.nearest_index == 0);
    CHECK(r.distance == 0);

    const std::uint64_t a3[] = {4, 6};
    r = classical_nearest(a3, 5);
    CHECK(r.nearest_index == 0);
    CHECK(r.distance == 1);
    CHECK(r.tied_indices == std::vector<std::size_t>{0, 1});

    CHECK_THROWS_AS(classical_nearest({}, 1), InputError);
}

TEST_CASE("compare_with") {
    const std::uint64_t tied[] = {4, 6, 0};
    auto r = classical_nearest(tied, 5);
    compare_with(r, {1, false});
    CHECK(r.agreement);
    compare_with(r, {2, false});
    CHECK_FALSE(r.agreement);

    const std::uint64_t unique[] = {2, 6};
    r = classical_nearest(unique, 5);
    compare_with(r, {0, false});
    CHECK_FALSE(r.agreement);
}

TEST_CASE("closed_form_paper") {
    const std::uint64_t a[] = {2, 6};
    auto d = closed_form_paper(a, 5, 3);
    CHECK(std::abs(d.probabilities[0] - 0.3647009749634508) < 1e-15);
    CHECK(std::abs(d.probabilities[1] - 0.6352990250365492) < 1e-15);

    const std::uint64_t same[] = {3, 3};
    d = closed_form_paper(same, 3, 3);
    CHECK(d.probabilities[0] == doctest::Approx(0.5));

    const std::uint64_t comp[] = {5, 1};
    const auto c = closed_form_paper(comp, 2, 3);
    CHECK(std::abs(c.probabilities[0] - 0.3647009749634508) < 1e-15);

    const std::uint64_t three[] = {1, 2, 3};
    CHECK_THROWS_AS(closed_form_paper(three, 1, 3), InputError);
    const std::uint64_t big[] = {1, 9};
    CHECK_THROWS_AS(closed_form_paper(big, 1, 3), InputError);
}

TEST_CASE("closed_form_generalized") {
    const std::uint64_t a[] = {2, 6, 5, 0};
    auto d = closed_form_generalized(a, 5, 3);
    const double expected[] = {0.2334, 0.3248, 0.3376, 0.1042};
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(std::abs(d.probabilities[j] - expected[j]) < 5e-5);
    CHECK(std::abs(d.postselect_probability - 0.7405) < 5e-5);

    const std::uint64_t one[] = {6};
    d = closed_form_generalized(one, 1, 3);
    CHECK(d.probabilities == std::vector<double>{1.0});

    const std::uint64_t eq[] = {4, 4, 4};
    d = closed_form_generalized(eq, 4, 3);
    for (auto p : d.probabilities)
        CHECK(p == doctest::Approx(1.0 / 3));

    CHECK_THROWS_AS(closed_form_generalized({}, 1, 3), InputError);
}

TEST_CASE("closed forms agree with the simulator") {
    for (unsigned n = 1; n <= 3; ++n)
        for (std::uint64_t b = 0; b < (1u << n); ++b)
            for (std::uint64_t x = 0; x < (1u << n); ++x)
                for (std::uint64_t y = 0; y < (1u << n); ++y) {
                    QarnProblem p{n, {x, y}, b, Mode::PaperExact};
                    const auto sim = index_distribution(run(p), p);
                    const auto cf = closed_form_paper(p.a, b, n);
                    CHECK(std::abs(sim.probabilities[0] - cf.probabilities[0]) <= 1e-12);
                }

    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = 1 + rng() % 6;
        QarnProblem p{n, std::vector<std::uint64_t>(1 + rng() % 10), rng() % (1u << n),
                      Mode::Generalized};
        for (auto &v : p.a)
            v = rng() % (1u << n);
        const auto sim = index_distribution(run(p), p);
        const auto cf = closed_form_generalized(p.a, p.b, n);
        for (std::size_t j = 0; j < p.m(); ++j)
            CHECK(std::abs(sim.probabilities[j] - cf.probabilities[j]) <= 1e-12);
        CHECK(std::abs(sim.postselect_probability - cf.postselect_probability) <= 1e-12);
    }
}

TEST_CASE("property: closer elements get strictly more probability") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned n = 1 + rng() % 8;
        std::vector<std::uint64_t> a(2 + rng() % 8);
        for (auto &v : a)
            v = rng() % (1u << n);
        const std::uint64_t b = rng() % (1u << n);
        const auto d = closed_form_generalized(a, b, n);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) {
                const auto di = a[i] > b ? a[i] - b : b - a[i];
                const auto dj = a[j] > b ? a[j] - b : b - a[j];
                if (di < dj)
                    CHECK(d.probabilities[i] > d.probabilities[j]);
                if (di == dj)
                    CHECK(std::abs(d.probabilities[i] - d.probabilities[j]) < 1e-15);
            }
    }
}

TEST_CASE("agreement sweep") {
    const auto rows = agreement_sweep(3, 4, 50, 7);
    CHECK(rows.size() == 3 * 5);
    for (const auto &r : rows) {
        CHECK(r.tally.instances == 50);
        CHECK(r.tally.unique + r.tally.ties == 50);
        CHECK(r.tally.unique_agree == r.tally.unique);
        CHECK(r.tally.tie_min_attained == r.tally.ties);
    }
    CHECK(to_csv(rows) == to_csv(agreement_sweep(3, 4, 50, 7)));
    CHECK(to_csv(rows).rfind("mode,n,m,instances,", 0) == 0);

    CHECK_THROWS_AS(agreement_sweep(3, 4, 0, 7), InputError);
    CHECK_THROWS_AS(agreement_sweep(0, 4, 1, 7), InputError);
    CHECK_THROWS_AS(agreement_sweep(40, 4, 1, 7), CapacityError);
}
