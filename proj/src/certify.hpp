// Copyright 2026 The mrsums authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MRSUMS_CERTIFY_HPP
#define MRSUMS_CERTIFY_HPP

#include <optional>
#include <string>

#include "bounds.hpp"
#include "primes.hpp"
#include "sums.hpp"

namespace mrs {

enum class CertKind {
  ValuationNegative,  // v_p(value) < 0 for a named prime p
  BoundBelowOne,      // value certified to lie in (0, 1)
  StrictlyBetween,    // lower_int < value < lower_int + 1
  IntegerException,   // value is the stated integer
};

const char* cert_kind_name(CertKind k);

struct Certificate {
  CertKind kind;
  std::string method;
  SumSpec spec;

  // ValuationNegative: when valuation_exact, `valuation` is v_p(value);
  // otherwise it is a proven upper bound (still < 0).
  uint64_t prime = 0;
  long valuation = 0;
  bool valuation_exact = false;
  bool cross_checked = false;  // claim re-verified against the exact value

  std::optional<Rat> exact_value;
  std::optional<Enclosure> value_enclosure;
  std::optional<BoundReport> bound;  // comparison backing a bound certificate

  Int lower_int{0}, upper_int{0};    // StrictlyBetween
  std::optional<Int> integer_value;  // IntegerException

  explicit Certificate(CertKind kind_, std::string method_, SumSpec spec_)
      : kind(kind_), method(std::move(method_)), spec(std::move(spec_)) {}
};

struct CertifyContext {
  const PrimeTable* table = nullptr;
  ExactOptions exact;
  uint64_t exact_nk_budget = 5000;  // exact fallback refuses past n*k
  bool cross_check = true;
};

// Window-prime valuation for f = 2x-1, strict mode: a prime in
// (n/(k+1/2), n/k] with p > 2k pins v_p = -(s_1+...+s_k).
// Throws NoQualifyingPrime when the window has no such prime.
Certificate window_valuation_certificate(const CertifyContext& ctx, const ExponentTuple& s,
                                         uint64_t n, uint64_t k);

// Star sums of f = 2x-1, n >= 2: the largest prime in ((2n-1)/2, 2n-1]
// divides exactly one odd number below 2n, so v_p = -(s_1+...+s_k).
Certificate star_bertrand_certificate(const CertifyContext& ctx, const ExponentTuple& s,
                                      uint64_t n);

// Monomial f = c*x^m, star mode (or k = 1), n >= 2: Bertrand prime
// p in (n/2, n] gives v_p = -(m + v_p(c)) * (s_1+...+s_k).
Certificate monomial_certificate(const CertifyContext& ctx, const SumSpec& spec);

// f = 2x-1 strict, s_1 >= 30 with unit tail, 48 <= n <= 1191, 2 <= k <= 8:
// split at q_n; the 245157(q+46)^22 < q^(s1-1) check caps the numerator,
// so v_{q_n} <= -2.
Certificate qn_split_certificate(const CertifyContext& ctx, const ExponentTuple& s, uint64_t n,
                                 uint64_t k);

// f = 2x-1 strict, s_1 >= 7 with unit tail, 12 <= n <= 47, 2 <= k <= 4:
// split at l_n; always cross-checked exactly.
Certificate ln_split_certificate(const CertifyContext& ctx, const ExponentTuple& s, uint64_t n,
                                 uint64_t k);

// f = 2x-1 strict, k = 2, s_1 >= 2, s_2 = 1, n <= 11: the 2n-3 prime
// route for n in {3,4,5,7,8,10,11}, dedicated 3-adic routes for n = 6, 9
// (s_1 >= 3).
Certificate small_n_certificate(const CertifyContext& ctx, const ExponentTuple& s, uint64_t n);

// Full strategy cascade: known exceptions, then bound strategies, then
// valuation strategies, then the exact-value fallback.
// Throws Unsupported outside the certified families or past the budget.
Certificate certify(const CertifyContext& ctx, const SumSpec& spec);

// The parameter combinations whose sums are genuinely integers.
bool is_expected_integer_exception(const SumSpec& spec);

}  // namespace mrs

#endif
