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

#include "qarn/search.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "qarn/error.hpp"

namespace qarn {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

const std::set<std::string_view> &response_keys() {
    static const std::set<std::string_view> keys{
        "probabilities", "argmax",      "is_tie",   "classical_nearest",
        "classical_distance", "tied_indices", "agreement", "postselect_probability",
        "counts",        "accepted",    "rejected", "elapsed_seconds"};
    return keys;
}

std::string join(const std::vector<double> &values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + format_double(values[i]);
    return out;
}

template <class T> std::string join(const std::vector<T> &values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

class Writer {
  public:
    explicit Writer(bool pretty) : pretty_(pretty) {}

    void add(std::string key, std::string value) {
        entries_.emplace_back(std::move(key), std::move(value));
    }

    std::string str(std::string_view title) const {
        std::size_t width = 0;
        for (const auto &e : entries_)
            width = std::max(width, e.first.size());
        std::ostringstream out;
        out << "# " << title << '\n';
        for (const auto &[key, value] : entries_) {
            if (pretty_)
                out << key << std::string(width - key.size(), ' ') << " = " << value << '\n';
            else
                out << key << '=' << value << '\n';
        }
        return out.str();
    }

  private:
    bool pretty_;
    std::vector<std::pair<std::string, std::string>> entries_;
};

void require_unit_sum(const IndexDistribution &dist) {
    double sum = 0.0;
    for (auto p : dist.probabilities)
        sum += p;
    if (!(std::abs(sum - 1.0) <= kNormTolerance))
        throw NumericError("index probabilities sum to " + format_double(sum));
}

} // namespace

std::uint64_t parse_unsigned(std::string_view text) {
    text = trim(text);
    std::uint64_t value = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw InputError("expected a non-negative integer, got '" + std::string(text) + "'");
    return value;
}

std::vector<std::uint64_t> parse_value_list(std::string_view text) {
    std::vector<std::uint64_t> values;
    text = trim(text);
    if (text.empty())
        throw InputError("array must contain at least one element");
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        values.push_back(parse_unsigned(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return values;
}

SearchRequest parse_request(std::string_view text) {
    SearchRequest request;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw InputError("line " + std::to_string(line_no) + ": expected key=value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (!seen.emplace(key).second)
            throw InputError("line " + std::to_string(line_no) + ": duplicate key '" +
                             std::string(key) + "'");
        if (key == "n") {
            const auto n = parse_unsigned(value);
            if (n < 1 || n > kMaxBits)
                throw InputError("bit width must be in [1, " + std::to_string(kMaxBits) + "]");
            request.problem.n = static_cast<unsigned>(n);
        } else if (key == "b") {
            request.problem.b = parse_unsigned(value);
        } else if (key == "a") {
            request.problem.a = parse_value_list(value);
        } else if (key == "mode") {
            request.problem.mode = parse_mode(value);
        } else if (key == "shots") {
            request.shots = parse_unsigned(value);
            if (*request.shots == 0)
                throw InputError("shots must be >= 1");
        } else if (key == "seed") {
            request.seed = parse_unsigned(value);
        } else if (!response_keys().contains(key)) {
            throw InputError("line " + std::to_string(line_no) + ": unknown key '" +
                             std::string(key) + "'");
        }
    }
    for (const char *required : {"n", "b", "a"})
        if (!seen.contains(std::string_view(required)))
            throw InputError(std::string("missing required key '") + required + "'");
    request.problem.validate();
    return request;
}

SearchResponse search(const SearchRequest &request) {
    if (request.shots && *request.shots == 0)
        throw InputError("shots must be >= 1");
    request.problem.validate();

    const auto start = std::chrono::steady_clock::now();
    SearchResponse response;
    response.request = request;
    const auto state = run(request.problem);
    response.distribution = index_distribution(state, request.problem);
    require_unit_sum(response.distribution);
    response.decision = decide(response.distribution);
    response.oracle = classical_nearest(request.problem.a, request.problem.b);
    compare_with(response.oracle, response.decision);
    if (request.shots) {
        const auto seed = request.seed.value_or(kDefaultSeed);
        response.request.seed = seed;
        response.counts = sample(response.distribution, *request.shots, seed);
    }
    response.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return response;
}

std::string to_text(const SearchResponse &r, const TextOptions &options) {
    Writer w(options.pretty);
    const auto &p = r.request.problem;
    w.add("n", std::to_string(p.n));
    w.add("b", std::to_string(p.b));
    w.add("a", join(p.a));
    w.add("mode", std::string(to_string(p.mode)));
    if (r.request.shots) {
        w.add("shots", std::to_string(*r.request.shots));
        w.add("seed", std::to_string(r.request.seed.value_or(kDefaultSeed)));
    }
    w.add("probabilities", join(r.distribution.probabilities));
    w.add("argmax", std::to_string(r.decision.index));
    w.add("is_tie", r.decision.is_tie ? "true" : "false");
    w.add("classical_nearest", std::to_string(r.oracle.nearest_index));
    w.add("classical_distance", std::to_string(r.oracle.distance));
    w.add("tied_indices", join(r.oracle.tied_indices));
    w.add("agreement", r.oracle.agreement ? "true" : "false");
    w.add("postselect_probability", format_double(r.distribution.postselect_probability));
    if (r.counts) {
        w.add("counts", join(r.counts->counts));
        w.add("accepted", std::to_string(r.counts->shots));
        w.add("rejected", std::to_string(r.counts->rejected));
    }
    if (options.timing)
        w.add("elapsed_seconds", format_double(r.elapsed_seconds));
    return w.str("qarn search response");
}

PaperExampleReport run_paper_example(const ComparisonOptions &options) {
    QarnProblem problem{3, {2, 6}, 5, Mode::PaperExact};
    PaperExampleReport report;
    report.paper = index_distribution(run(problem, options), problem);
    problem.mode = Mode::FullCircuit;
    report.full = index_distribution(run(problem, options), problem);
    for (std::size_t j = 0; j < 2; ++j)
        report.max_deviation = std::max(
            report.max_deviation,
            std::abs(report.paper.probabilities[j] - report.full.probabilities[j]));
    report.ok = std::abs(report.paper.probabilities[0] - kPaperExampleP0) <=
                    kPaperExampleTolerance &&
                report.max_deviation <= kModeAgreementTolerance;
    return report;
}

std::string to_text(const PaperExampleReport &report) {
    Writer w(false);
    w.add("n", "3");
    w.add("b", "5");
    w.add("a", "2,6");
    w.add("paper_probabilities", join(report.paper.probabilities));
    w.add("full_probabilities", join(report.full.probabilities));
    w.add("max_deviation", format_double(report.max_deviation));
    w.add("expected_p0", format_double(kPaperExampleP0));
    w.add("p0_tolerance", format_double(kPaperExampleTolerance));
    w.add("ok", report.ok ? "true" : "false");
    return w.str("qarn paper example");
}

} // namespace qarn
