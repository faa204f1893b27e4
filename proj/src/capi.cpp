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

#include "qarn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qarn/error.hpp"
#include "qarn/search.hpp"

struct qarn_request {
    qarn::SearchRequest value;
};

struct qarn_result {
    qarn::SearchResponse value;
};

namespace {

thread_local std::string last_error;

qarn_status fail(qarn_status status, const char *message) {
    last_error = message;
    return status;
}

template <class F> qarn_status guarded(F &&body) {
    last_error.clear();
    try {
        return body();
    } catch (const qarn::InputError &e) {
        return fail(QARN_ERR_INPUT, e.what());
    } catch (const qarn::NumericError &e) {
        return fail(QARN_ERR_NUMERIC, e.what());
    } catch (const qarn::CapacityError &e) {
        return fail(QARN_ERR_CAPACITY, e.what());
    } catch (const std::bad_alloc &) {
        return fail(QARN_ERR_CAPACITY, "out of memory");
    } catch (const std::exception &e) {
        return fail(QARN_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QARN_ERR_INTERNAL, "unknown error");
    }
}

char *copy_string(const std::string &s) {
    auto *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qarn::Mode to_mode(qarn_mode mode) {
    switch (mode) {
    case QARN_MODE_PAPER:
        return qarn::Mode::PaperExact;
    case QARN_MODE_GENERALIZED:
        return qarn::Mode::Generalized;
    case QARN_MODE_FULL:
        return qarn::Mode::FullCircuit;
    }
    throw qarn::InputError("unknown mode value");
}

#define QARN_REQUIRE(ptr)                                                                    \
    do {                                                                                     \
        if ((ptr) == nullptr)                                                                \
            return fail(QARN_ERR_INPUT, #ptr " must not be null");                           \
    } while (0)

} // namespace

extern "C" {

const char *qarn_last_error(void) { return last_error.c_str(); }

void qarn_string_free(char *text) { std::free(text); }

qarn_status qarn_request_create(unsigned bits, uint64_t target, const uint64_t *values,
                                size_t count, qarn_mode mode, uint64_t shots, int has_seed,
                                uint64_t seed, qarn_request **out) {
    QARN_REQUIRE(out);
    *out = nullptr;
    if (count > 0)
        QARN_REQUIRE(values);
    return guarded([&] {
        qarn::SearchRequest request;
        request.problem.n = bits;
        request.problem.b = target;
        request.problem.a.assign(values, values + count);
        request.problem.mode = to_mode(mode);
        if (shots > 0)
            request.shots = shots;
        if (has_seed)
            request.seed = seed;
        request.problem.validate();
        *out = new qarn_request{std::move(request)};
        return QARN_OK;
    });
}

qarn_status qarn_request_parse(const char *text, qarn_request **out) {
    QARN_REQUIRE(out);
    *out = nullptr;
    QARN_REQUIRE(text);
    return guarded([&] {
        *out = new qarn_request{qarn::parse_request(text)};
        return QARN_OK;
    });
}

void qarn_request_destroy(qarn_request *request) { delete request; }

qarn_status qarn_search(const qarn_request *request, qarn_result **out) {
    QARN_REQUIRE(out);
    *out = nullptr;
    QARN_REQUIRE(request);
    return guarded([&] {
        *out = new qarn_result{qarn::search(request->value)};
        return QARN_OK;
    });
}

void qarn_result_destroy(qarn_result *result) { delete result; }

size_t qarn_result_count(const qarn_result *r) {
    return r ? r->value.distribution.probabilities.size() : 0;
}

double qarn_result_probability(const qarn_result *r, size_t index) {
    if (!r || index >= r->value.distribution.probabilities.size())
        return 0.0;
    return r->value.distribution.probabilities[index];
}

size_t qarn_result_argmax(const qarn_result *r) { return r ? r->value.decision.index : 0; }

int qarn_result_is_tie(const qarn_result *r) { return r && r->value.decision.is_tie ? 1 : 0; }

size_t qarn_result_classical_nearest(const qarn_result *r) {
    return r ? r->value.oracle.nearest_index : 0;
}

int qarn_result_agreement(const qarn_result *r) { return r && r->value.oracle.agreement ? 1 : 0; }

double qarn_result_postselect_probability(const qarn_result *r) {
    return r ? r->value.distribution.postselect_probability : 0.0;
}

uint64_t qarn_result_shot_count(const qarn_result *r, size_t index) {
    if (!r || !r->value.counts || index >= r->value.counts->counts.size())
        return 0;
    return r->value.counts->counts[index];
}

uint64_t qarn_result_rejected(const qarn_result *r) {
    return r && r->value.counts ? r->value.counts->rejected : 0;
}

double qarn_result_elapsed_seconds(const qarn_result *r) {
    return r ? r->value.elapsed_seconds : 0.0;
}

qarn_status qarn_result_to_text(const qarn_result *result, unsigned flags, char **out) {
    QARN_REQUIRE(out);
    *out = nullptr;
    QARN_REQUIRE(result);
    return guarded([&] {
        qarn::TextOptions options;
        options.pretty = (flags & QARN_TEXT_PRETTY) != 0;
        options.timing = (flags & QARN_TEXT_TIMING) != 0;
        *out = copy_string(qarn::to_text(result->value, options));
        return QARN_OK;
    });
}

qarn_status qarn_circuit_dump(const qarn_request *request, char **out) {
    QARN_REQUIRE(out);
    *out = nullptr;
    QARN_REQUIRE(request);
    return guarded([&] {
        *out = copy_string(qarn::to_text(qarn::build_circuit(request->value.problem)));
        return QARN_OK;
    });
}

qarn_status qarn_paper_example(unsigned flags, char **out) {
    QARN_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        qarn::ComparisonOptions options;
        options.signed_rotation = (flags & QARN_PAPER_UNSIGNED_ROTATION) == 0;
        const auto report = qarn::run_paper_example(options);
        *out = copy_string(qarn::to_text(report));
        if (!report.ok)
            return fail(QARN_ERR_NUMERIC, "paper example check failed");
        return QARN_OK;
    });
}

qarn_status qarn_sweep(unsigned max_bits, size_t max_m, uint64_t count, uint64_t seed,
                       char **out) {
    QARN_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        const auto rows = qarn::agreement_sweep(max_bits, max_m, count, seed);
        *out = copy_string(qarn::to_csv(rows));
        return QARN_OK;
    });
}

} // extern "C"
