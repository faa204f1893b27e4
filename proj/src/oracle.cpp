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

#include "qarn/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <mutex>
#include <sstream>
#include <thread>

#include "qarn/error.hpp"

namespace qarn {

namespace {

std::uint64_t abs_diff(std::uint64_t x, std::uint64_t y) { return x > y ? x - y : y - x; }

void check_values(std::span<const std::uint64_t> a, std::uint64_t b, unsigned n) {
    if (a.empty())
        throw InputError("array must contain at least one element");
    if (n < 1 || n > kMaxBits)
        throw InputError("bit width out of range");
    const std::uint64_t limit = std::uint64_t{1} << n;
    if (b >= limit)
        throw InputError("reference value does not fit in the bit width");
    for (auto v : a)
        if (v >= limit)
            throw InputError("element does not fit in the bit width");
}

} // namespace

OracleReport classical_nearest(std::span<const std::uint64_t> a, std::uint64_t b) {
    if (a.empty())
        throw InputError("array must contain at least one element");
    OracleReport report;
    report.distance = abs_diff(a[0], b);
    for (std::size_t j = 1; j < a.size(); ++j)
        report.distance = std::min(report.distance, abs_diff(a[j], b));
    for (std::size_t j = 0; j < a.size(); ++j)
        if (abs_diff(a[j], b) == report.distance)
            report.tied_indices.push_back(j);
    report.nearest_index = report.tied_indices.front();
    return report;
}

void compare_with(OracleReport &report, const Decision &decision) {
    if (report.tied_indices.size() == 1) {
        report.agreement = decision.index == report.nearest_index;
        return;
    }
    report.agreement = std::find(report.tied_indices.begin(), report.tied_indices.end(),
                                 decision.index) != report.tied_indices.end();
}

IndexDistribution closed_form_paper(std::span<const std::uint64_t> a, std::uint64_t b,
                                    unsigned n) {
    if (a.size() != 2)
        throw InputError("closed_form_paper needs exactly two elements");
    check_values(a, b, n);
    const double h0 = branch_angle(n, b, a[0]) / 2;
    const double h1 = branch_angle(n, b, a[1]) / 2;
    const double s0 = std::sin(h0), c0 = std::cos(h0);
    const double s1 = std::sin(h1), c1 = std::cos(h1);
    IndexDistribution dist;
    dist.mode = Mode::PaperExact;
    dist.probabilities = {(c0 * c0 + s1 * s1) / 2, (c1 * c1 + s0 * s0) / 2};
    return dist;
}

IndexDistribution closed_form_generalized(std::span<const std::uint64_t> a, std::uint64_t b,
                                          unsigned n) {
    check_values(a, b, n);
    IndexDistribution dist;
    dist.mode = Mode::Generalized;
    double total = 0.0;
    for (auto v : a) {
        const double c = std::cos(branch_angle(n, b, v) / 2);
        dist.probabilities.push_back(c * c);
        total += c * c;
    }
    for (auto &p : dist.probabilities)
        p /= total;
    dist.postselect_probability = total / static_cast<double>(a.size());
    return dist;
}

void AgreementTally::add(const AgreementTally &o) {
    instances += o.instances;
    unique += o.unique;
    unique_agree += o.unique_agree;
    ties += o.ties;
    tie_min_attained += o.tie_min_attained;
}

double AgreementTally::agreement_rate() const {
    return unique == 0 ? 1.0 : static_cast<double>(unique_agree) / static_cast<double>(unique);
}

AgreementTally tally_instance(const QarnProblem &problem) {
    const auto state = run(problem);
    const auto decision = decide(index_distribution(state, problem));
    auto report = classical_nearest(problem.a, problem.b);
    compare_with(report, decision);

    AgreementTally t;
    t.instances = 1;
    if (report.tied_indices.size() == 1) {
        t.unique = 1;
        t.unique_agree = report.agreement ? 1 : 0;
    } else {
        t.ties = 1;
        t.tie_min_attained = report.agreement ? 1 : 0;
    }
    return t;
}

std::vector<SweepRow> agreement_sweep(unsigned n_max, std::size_t m_max, std::uint64_t count,
                                      std::uint64_t seed) {
    if (n_max < 1 || n_max > kMaxBits)
        throw InputError("max bits must be in [1, " + std::to_string(kMaxBits) + "]");
    if (m_max < 1)
        throw InputError("max m must be >= 1");
    if (count == 0)
        throw InputError("instance count must be >= 1");

    std::vector<SweepRow> rows;
    for (unsigned n = 1; n <= n_max; ++n)
        for (std::size_t m = 1; m <= m_max; ++m) {
            if (m == 2)
                rows.push_back({Mode::PaperExact, n, m, {}});
            rows.push_back({Mode::Generalized, n, m, {}});
        }

    // Fail fast on capacity before spawning work.
    for (const auto &row : rows) {
        QarnProblem probe{row.n, std::vector<std::uint64_t>(row.m, 0), 0, row.mode};
        (void)build_layout(probe);
    }

    auto work = [count, seed](const SweepRow &row) {
        std::mt19937_64 engine(seed + 0x9E3779B97F4A7C15ull * (1000ull * row.n + row.m));
        const std::uint64_t mask = (std::uint64_t{1} << row.n) - 1;
        AgreementTally tally;
        QarnProblem problem{row.n, std::vector<std::uint64_t>(row.m), 0, row.mode};
        for (std::uint64_t i = 0; i < count; ++i) {
            problem.b = engine() & mask;
            for (auto &v : problem.a)
                v = engine() & mask;
            tally.add(tally_instance(problem));
        }
        return tally;
    };

    // Each row owns its generator, so the split across workers cannot change
    // the result.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
            try {
                rows[i].tally = work(rows[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const auto workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1,
                                                 rows.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    for (auto &t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

std::string to_csv(std::span<const SweepRow> rows) {
    std::ostringstream out;
    out << "mode,n,m,instances,unique,unique_agree,agreement_rate,ties,tie_min_attained\n";
    for (const auto &r : rows)
        out << to_string(r.mode) << ',' << r.n << ',' << r.m << ',' << r.tally.instances << ','
            << r.tally.unique << ',' << r.tally.unique_agree << ',' << format_double(r.tally.agreement_rate())
            << ',' << r.tally.ties << ',' << r.tally.tie_min_attained << '\n';
    return out.str();
}

} // namespace qarn
