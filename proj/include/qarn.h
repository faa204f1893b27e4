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

/*
 * C interface to the qarn nearest-element search simulator.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns a qarn_status;
 * on failure qarn_last_error() describes the problem until the next call on
 * the same thread. Strings returned through char** are released with
 * qarn_string_free().
 */
#ifndef QARN_H
#define QARN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QARN_BUILDING_LIBRARY)
#    define QARN_API __declspec(dllexport)
#  else
#    define QARN_API __declspec(dllimport)
#  endif
#else
#  define QARN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as the CLI exit codes. */
typedef enum qarn_status {
    QARN_OK = 0,
    QARN_ERR_INPUT = 1,
    QARN_ERR_NUMERIC = 2,
    QARN_ERR_CAPACITY = 3,
    QARN_ERR_INTERNAL = 4
} qarn_status;

typedef enum qarn_mode {
    QARN_MODE_PAPER = 0,
    QARN_MODE_GENERALIZED = 1,
    QARN_MODE_FULL = 2
} qarn_mode;

/* Flags for qarn_result_to_text. */
#define QARN_TEXT_PRETTY 0x1u
#define QARN_TEXT_TIMING 0x2u

/* Flags for qarn_paper_example. Rotates every differing bit the same way,
 * which must make the check fail. */
#define QARN_PAPER_UNSIGNED_ROTATION 0x1u

typedef struct qarn_request qarn_request;
typedef struct qarn_result qarn_result;

QARN_API const char *qarn_last_error(void);
QARN_API void qarn_string_free(char *text);

/* shots == 0 means no sampling; seed is used only when has_seed != 0. */
QARN_API qarn_status qarn_request_create(unsigned bits, uint64_t target, const uint64_t *values,
                                         size_t count, qarn_mode mode, uint64_t shots,
                                         int has_seed, uint64_t seed, qarn_request **out);
/* Parses a request (or response) document. */
QARN_API qarn_status qarn_request_parse(const char *text, qarn_request **out);
QARN_API void qarn_request_destroy(qarn_request *request);

QARN_API qarn_status qarn_search(const qarn_request *request, qarn_result **out);
QARN_API void qarn_result_destroy(qarn_result *result);

QARN_API size_t qarn_result_count(const qarn_result *result);
QARN_API double qarn_result_probability(const qarn_result *result, size_t index);
QARN_API size_t qarn_result_argmax(const qarn_result *result);
QARN_API int qarn_result_is_tie(const qarn_result *result);
QARN_API size_t qarn_result_classical_nearest(const qarn_result *result);
QARN_API int qarn_result_agreement(const qarn_result *result);
QARN_API double qarn_result_postselect_probability(const qarn_result *result);
/* Zero when no shots were requested. */
QARN_API uint64_t qarn_result_shot_count(const qarn_result *result, size_t index);
QARN_API uint64_t qarn_result_rejected(const qarn_result *result);
QARN_API double qarn_result_elapsed_seconds(const qarn_result *result);
QARN_API qarn_status qarn_result_to_text(const qarn_result *result, unsigned flags, char **out);

/* Line-oriented dump of the circuit the request would execute. */
QARN_API qarn_status qarn_circuit_dump(const qarn_request *request, char **out);

/* Runs the fixed three-bit worked instance in paper and full-circuit modes.
 * The report is written to *out even when the check fails, in which case
 * QARN_ERR_NUMERIC is returned. */
QARN_API qarn_status qarn_paper_example(unsigned flags, char **out);

/* Agreement sweep as a CSV table with a header line. */
QARN_API qarn_status qarn_sweep(unsigned max_bits, size_t max_m, uint64_t count, uint64_t seed,
                                char **out);

#ifdef __cplusplus
}
#endif

#endif /* QARN_H */
