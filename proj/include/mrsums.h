/* Copyright 2026 The mrsums authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* mrsums -- exact multiple reciprocal sums of integer polynomials, with
 * machine-checkable integrality certificates.
 *
 * The C surface of the shared library. Every entry point works on an
 * opaque engine handle; string results are heap-allocated and released
 * with mrs_string_free(). Status codes mirror the CLI exit codes.
 */

#ifndef MRSUMS_H
#define MRSUMS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MRS_API __declspec(dllexport)
#else
#define MRS_API __attribute__((visibility("default")))
#endif

typedef struct mrs_engine mrs_engine;

typedef enum {
  MRS_OK = 0,
  MRS_ERR_INVALID = 2,     /* bad input or precondition */
  MRS_ERR_BUDGET = 3,      /* a configured budget was exceeded */
  MRS_ERR_FALSIFIED = 4,   /* a verified expectation failed */
  MRS_ERR_UNSUPPORTED = 5, /* outside the certified families */
  MRS_ERR_NOT_FOUND = 6,   /* required witness missing */
  MRS_ERR_UNDECIDED = 7,   /* comparison undecided at max precision */
  MRS_ERR_INTERNAL = 8
} mrs_status;

typedef enum { MRS_MODE_STRICT = 0, MRS_MODE_STAR = 1 } mrs_mode;

typedef enum {
  MRS_BACKEND_AUTO = 0,     /* exact, falling back to an enclosure */
  MRS_BACKEND_EXACT = 1,
  MRS_BACKEND_ENCLOSURE = 2
} mrs_backend;

typedef enum { MRS_FORMAT_TEXT = 0, MRS_FORMAT_JSON = 1, MRS_FORMAT_CSV = 2 } mrs_format;

/* mrs_compute flags */
#define MRS_COMPUTE_NO_REDUCE 1u /* defer gcd reduction to output (exact backend) */
#define MRS_COMPUTE_TRACE 2u     /* report prefix values that land on integers */

/* Engine lifecycle. mrs_engine_new() uses the defaults (sieve limit 2e6,
 * denominator budget 2e6 decimal digits, exact fallback budget n*k <= 5000,
 * enclosure width 1e-12, threads = cores). Any argument may be 0 / NULL to
 * keep its default. Returns NULL on failure. */
MRS_API mrs_engine* mrs_engine_new(void);
MRS_API mrs_engine* mrs_engine_new_with(uint64_t sieve_limit, uint64_t digit_budget,
                                        uint64_t exact_nk_budget, const char* default_width,
                                        unsigned threads);
MRS_API void mrs_engine_free(mrs_engine* engine);

/* Message for the most recent failure on this engine (valid until the next
 * call on the same engine). Engines are not meant to be shared across
 * threads concurrently. */
MRS_API const char* mrs_last_error(const mrs_engine* engine);

MRS_API const char* mrs_version(void);
MRS_API void mrs_string_free(char* s);

/* Value of the sum for polynomial text `f` (e.g. "x^2+1"), exponent list
 * `s` (e.g. "2,1" or "30,1x7"), upper limit n. `width` (rational or
 * decimal text, NULL for the default) applies to the enclosure backend;
 * `flags` is a combination of the MRS_COMPUTE_* bits. `*out` receives the
 * rendered result. */
MRS_API mrs_status mrs_compute(mrs_engine* engine, const char* f, const char* s, uint64_t n,
                               mrs_mode mode, mrs_backend backend, const char* width,
                               unsigned flags, mrs_format format, char** out);

/* Integrality certificate for the same instance. */
MRS_API mrs_status mrs_certify(mrs_engine* engine, const char* f, const char* s, uint64_t n,
                               mrs_mode mode, mrs_format format, char** out);

/* Reference tables for f = 2x-1:
 *   1: (p(k), n_k) pairs, k = 2..18
 *   2: H_k(n_k) enclosures (rows k >= 11 only when include_extended != 0)
 *   3: H_k(47) enclosures, k = 5..8 */
MRS_API mrs_status mrs_table(mrs_engine* engine, int table_id, int include_extended,
                             const char* width, mrs_format format, char** out);

/* Certification sweep over n in [n_lo, n_hi], k in [k_lo, k_hi] (k_hi = 0
 * tracks n). tuple_gen is "allones", "alltwos" or "random[:count]". */
MRS_API mrs_status mrs_sweep(mrs_engine* engine, const char* f, mrs_mode mode, uint64_t n_lo,
                             uint64_t n_hi, uint64_t k_lo, uint64_t k_hi, const char* tuple_gen,
                             uint64_t seed, mrs_format format, char** out);

/* Prime queries. */
MRS_API mrs_status mrs_prime_nth(mrs_engine* engine, uint64_t index, uint64_t* out_prime);
MRS_API mrs_status mrs_prime_max_gap(mrs_engine* engine, uint64_t upto_index, uint64_t* out_gap);
MRS_API mrs_status mrs_prime_bertrand(mrs_engine* engine, uint64_t n, uint64_t* out_prime);
/* x as rational/decimal text, x >= 3275 */
MRS_API mrs_status mrs_prime_dusart(mrs_engine* engine, const char* x, uint64_t* out_prime);
/* prime in (n/(k+1/2), n/k] with p > 2k, n > 62801 */
MRS_API mrs_status mrs_prime_window(mrs_engine* engine, uint64_t n, uint64_t k,
                                    uint64_t* out_prime);
MRS_API mrs_status mrs_prime_threshold_pair(mrs_engine* engine, uint64_t k, uint64_t* out_p,
                                            uint64_t* out_nk);
MRS_API mrs_status mrs_prime_qn(mrs_engine* engine, uint64_t n, uint64_t* out_prime);
MRS_API mrs_status mrs_prime_ln(mrs_engine* engine, uint64_t n, uint64_t* out_prime);

#ifdef __cplusplus
}
#endif

#endif /* MRSUMS_H */
