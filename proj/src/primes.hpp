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

#ifndef MRSUMS_PRIMES_HPP
#define MRSUMS_PRIMES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace mrs {

// All primes up to a fixed limit, built once with a segmented sieve.
// Read-only after construction.
class PrimeTable {
 public:
  static constexpr uint64_t kDefaultLimit = 2000000;

  explicit PrimeTable(uint64_t limit = kDefaultLimit);

  uint64_t limit() const { return limit_; }
  size_t count() const { return primes_.size(); }
  uint64_t nth(size_t index) const;  // 1-based: nth(1) == 2
  bool is_prime(uint64_t v) const;

  // Largest prime <= v / smallest prime >= v within the table.
  std::optional<uint64_t> prev_prime(uint64_t v) const;
  std::optional<uint64_t> next_prime(uint64_t v) const;

  // Primes in the half-open-from-below window (lo, hi]. Throws when the
  // window reaches past the sieve limit.
  std::optional<uint64_t> smallest_in(const Rat& lo_exclusive, const Rat& hi_inclusive) const;
  std::optional<uint64_t> largest_in(const Rat& lo_exclusive, const Rat& hi_inclusive) const;
  std::optional<uint64_t> largest_in_closed(uint64_t lo, uint64_t hi) const;

  const std::vector<uint64_t>& primes() const { return primes_; }

 private:
  uint64_t limit_;
  std::vector<uint64_t> primes_;
};

// Largest prime in (n/2, n]; exists for every n >= 2.
uint64_t bertrand_prime(const PrimeTable& table, uint64_t n);

// A prime in (x, x*(1 + 1/(2 log^2 x))] for x >= 3275. The upper endpoint
// is evaluated as a rational enclosure and rounded down, so the window the
// search uses is contained in the true one. Returns the largest prime in
// the window.
uint64_t dusart_prime(const PrimeTable& table, const Rat& x);

// Whether k <= (e/2) log(2n+1) + e, decided with rational enclosures.
bool window_k_admissible(uint64_t n, uint64_t k);

// Smallest prime in (n/(k+1/2), n/k] exceeding 2k, for n > 62801 and
// admissible k. Throws PreconditionFailed when k is too large, NotFound
// when the window holds no such prime.
uint64_t scaled_window_prime(const PrimeTable& table, uint64_t n, uint64_t k);

// Smallest prime in (n/(k+1/2), n/k] with p > 2k, with no constraint on n;
// empty result when the window has none.
std::optional<uint64_t> find_window_prime(const PrimeTable& table, uint64_t n, uint64_t k);

// For 2 <= k <= 18: the largest prime p_j (2 <= j <= 6302) with
// k*p_j >= (k+1/2)*p_{j-1}, paired with n_k = k*p(k) - 1.
std::pair<uint64_t, uint64_t> threshold_prime_pair(const PrimeTable& table, unsigned k);

// Largest prime q with 14 <= (2n-1) - q <= 46, for 48 <= n <= 1191.
// Guarantees q >= 53 and q < 2n-1 < 2q.
uint64_t qn_prime(const PrimeTable& table, uint64_t n);

// Largest prime l in [2n-11, 2n-7], for 12 <= n <= 47. Guarantees
// 13 <= l <= 83 and l < 2n-1 < 2l.
uint64_t ln_prime(const PrimeTable& table, uint64_t n);

// max of p_i - p_{i-1} over 2 <= i <= upto_index.
uint64_t max_prime_gap(const PrimeTable& table, size_t upto_index);

}  // namespace mrs

#endif
