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

// Command-line front end. Talks to the library only through qarn.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qarn.h"

namespace {

constexpr int kExitInput = QARN_ERR_INPUT;

struct ProblemFlags {
    unsigned bits = 0;
    std::uint64_t target = 0;
    std::string array;
    std::string mode = "general";
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string input;
    std::string output;
    bool pretty = false;
    bool timing = false;

    CLI::Option *bits_opt = nullptr;
    CLI::Option *target_opt = nullptr;
    CLI::Option *array_opt = nullptr;
    CLI::Option *mode_opt = nullptr;
    CLI::Option *shots_opt = nullptr;
    CLI::Option *seed_opt = nullptr;
    CLI::Option *input_opt = nullptr;
};

int report(qarn_status status) {
    if (status != QARN_OK)
        std::cerr << "error: " << qarn_last_error() << '\n';
    return status == QARN_ERR_INTERNAL ? QARN_ERR_NUMERIC : static_cast<int>(status);
}

bool parse_list(const std::string &text, std::vector<std::uint64_t> &values) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            return false;
        try {
            values.push_back(std::stoull(item));
        } catch (const std::exception &) {
            return false;
        }
    }
    return !values.empty() && text.back() != ',';
}

bool read_file(const std::string &path, std::string &text) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
    return true;
}

int make_request(const ProblemFlags &f, qarn_request **request) {
    if (f.input_opt->count() > 0) {
        for (auto *opt : {f.bits_opt, f.target_opt, f.array_opt, f.mode_opt, f.shots_opt,
                          f.seed_opt})
            if (opt->count() > 0) {
                std::cerr << "error: --input cannot be combined with " << opt->get_name()
                          << '\n';
                return kExitInput;
            }
        std::string text;
        if (!read_file(f.input, text)) {
            std::cerr << "error: cannot read " << f.input << '\n';
            return kExitInput;
        }
        return report(qarn_request_parse(text.c_str(), request));
    }

    for (auto *opt : {f.bits_opt, f.target_opt, f.array_opt})
        if (opt->count() == 0) {
            std::cerr << "error: " << opt->get_name() << " is required without --input\n";
            return kExitInput;
        }
    std::vector<std::uint64_t> values;
    if (!parse_list(f.array, values)) {
        std::cerr << "error: --array must be a comma-separated list of non-negative integers\n";
        return kExitInput;
    }
    qarn_mode mode;
    if (f.mode == "paper")
        mode = QARN_MODE_PAPER;
    else if (f.mode == "general")
        mode = QARN_MODE_GENERALIZED;
    else if (f.mode == "full")
        mode = QARN_MODE_FULL;
    else {
        std::cerr << "error: --mode must be paper, general or full\n";
        return kExitInput;
    }
    if (f.shots_opt->count() > 0 && f.shots == 0) {
        std::cerr << "error: --shots must be >= 1\n";
        return kExitInput;
    }
    return report(qarn_request_create(f.bits, f.target, values.data(), values.size(), mode,
                                      f.shots, f.seed_opt->count() > 0, f.seed, request));
}

int emit(const std::string &text, const std::string &output) {
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write " << output << '\n';
        return kExitInput;
    }
    return 0;
}

void add_problem_flags(CLI::App *cmd, ProblemFlags &f) {
    f.bits_opt = cmd->add_option("--bits", f.bits, "Bit width n of every value");
    f.target_opt = cmd->add_option("--target", f.target, "Reference value B");
    f.array_opt = cmd->add_option("--array", f.array, "Comma-separated array elements");
    f.mode_opt = cmd->add_option("--mode", f.mode, "paper | general | full (default general)");
    f.input_opt = cmd->add_option("--input", f.input, "Read the request from a document");
}

int cmd_search(const ProblemFlags &f) {
    qarn_request *request = nullptr;
    if (int rc = make_request(f, &request); rc != 0)
        return rc;
    qarn_result *result = nullptr;
    auto status = qarn_search(request, &result);
    qarn_request_destroy(request);
    if (status != QARN_OK)
        return report(status);

    unsigned flags = 0;
    if (f.pretty)
        flags |= QARN_TEXT_PRETTY;
    if (f.timing)
        flags |= QARN_TEXT_TIMING;
    char *text = nullptr;
    status = qarn_result_to_text(result, flags, &text);
    qarn_result_destroy(result);
    if (status != QARN_OK)
        return report(status);
    const int rc = emit(text, f.output);
    qarn_string_free(text);
    return rc;
}

int cmd_circuit(const ProblemFlags &f) {
    qarn_request *request = nullptr;
    if (int rc = make_request(f, &request); rc != 0)
        return rc;
    char *text = nullptr;
    const auto status = qarn_circuit_dump(request, &text);
    qarn_request_destroy(request);
    if (status != QARN_OK)
        return report(status);
    const int rc = emit(text, f.output);
    qarn_string_free(text);
    return rc;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Nearest-element search on a simulated quantum circuit"};
    app.require_subcommand(1);

    ProblemFlags search_flags;
    auto *search = app.add_subcommand("search", "Find the element nearest to a reference value");
    add_problem_flags(search, search_flags);
    search_flags.shots_opt = search->add_option("--shots", search_flags.shots,
                                                "Number of sampled measurements");
    search_flags.seed_opt = search->add_option("--seed", search_flags.seed, "Sampling seed");
    search->add_option("--output", search_flags.output, "Write the response to a file");
    search->add_flag("--pretty", search_flags.pretty, "Align keys for reading");
    search->add_flag("--timing", search_flags.timing, "Include elapsed_seconds");

    ProblemFlags circuit_flags;
    auto *circuit = app.add_subcommand("circuit", "Dump the gate list a search would execute");
    add_problem_flags(circuit, circuit_flags);
    circuit_flags.shots_opt = circuit->add_option("--shots", circuit_flags.shots)->group("");
    circuit_flags.seed_opt = circuit->add_option("--seed", circuit_flags.seed)->group("");
    circuit->add_option("--output", circuit_flags.output, "Write the dump to a file");

    bool unsigned_rotation = false;
    auto *paper = app.add_subcommand("paper-example", "Reproduce the three-bit worked example");
    paper->add_flag("--unsigned-rotation", unsigned_rotation,
                    "Diagnostic: ignore the sign of bit differences (the check must fail)");

    unsigned max_bits = 4;
    std::size_t max_m = 4;
    std::uint64_t count = 100;
    std::uint64_t seed = 0;
    auto *sweep = app.add_subcommand("sweep", "Agreement of the circuit with a classical scan");
    sweep->add_option("--max-bits", max_bits, "Largest bit width");
    sweep->add_option("--max-m", max_m, "Largest array length");
    sweep->add_option("--count", count, "Random instances per (mode, n, m)");
    sweep->add_option("--seed", seed, "Instance generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    if (search->parsed())
        return cmd_search(search_flags);
    if (circuit->parsed())
        return cmd_circuit(circuit_flags);
    if (paper->parsed()) {
        char *text = nullptr;
        const auto status =
            qarn_paper_example(unsigned_rotation ? QARN_PAPER_UNSIGNED_ROTATION : 0u, &text);
        if (text != nullptr) {
            std::cout << text;
            qarn_string_free(text);
        }
        return report(status);
    }
    if (sweep->parsed()) {
        if (count == 0 || max_bits == 0 || max_m == 0) {
            std::cerr << "error: --count, --max-bits and --max-m must be >= 1\n";
            return kExitInput;
        }
        char *text = nullptr;
        const auto status = qarn_sweep(max_bits, max_m, count, seed, &text);
        if (status != QARN_OK)
            return report(status);
        std::cout << text;
        qarn_string_free(text);
        return 0;
    }
    return kExitInput;
}
