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

#include "primes.hpp"

#include <algorithm>
#include <cmath>

#include "enclosure.hpp"
#include "errors.hpp"

namespace mrs {

PrimeTable::PrimeTable(uint64_t limit) : limit_(limit) {
  if (limit < 2) throw InvalidInput("sieve limit must be >= 2");
  const uint64_t segment = 1 << 17;
  uint64_t sqrt_limit = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;
  while (sqrt_limit * sqrt_limit > limit + 1) --sqrt_limit;

  // small primes for crossing off
  std::vector<char> small(sqrt_limit + 1, 1);
  std::vector<uint64_t> small_primes;
  for (uint64_t i = 2; i <= sqrt_limit; ++i) {
    if (!small[i]) continue;
    small_primes.push_back(i);
    for (uint64_t j = i * i; j <= sqrt_limit; j += i) small[j] = 0;
  }

  std::vector<char> sieve(segment);
  for (uint64_t low = 2; low <= limit; low += segment) {
    uint64_t high = std::min(low + segment - 1, limit);
    std::fill(sieve.begin(), sieve.end(), 1);
    for (uint64_t p : small_primes) {
      if (p * p > high) break;
      uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (uint64_t j = start; j <= high; j += p) sieve[j - low] = 0;
    }
    for (uint64_t v = low; v <= high; ++v)
      if (sieve[v - low]) primes_.push_back(v);
  }
}

uint64_t PrimeTable::nth(size_t index) const {
  if (index < 1 || index > primes_.size())
    throw InvalidInput("prime index " + std::to_string(index) + " outside table");
  return primes_[index - 1];
}

bool PrimeTable::is_prime(uint64_t v) const {
  if (v > limit_) throw InvalidInput("value beyond sieve limit");
  return std::binary_search(primes_.begin(), primes_.end(), v);
}

std::optional<uint64_t> PrimeTable::prev_prime(uint64_t v) const {
  auto it = std::upper_bound(primes_.begin(), primes_.end(), v);
  if (it == primes_.begin()) return std::nullopt;
  return *(it - 1);
}

std::optional<uint64_t> PrimeTable::next_prime(uint64_t v) const {
  if (v > limit_) throw InvalidInput("value beyond sieve limit");
  auto it = std::lower_bound(primes_.begin(), primes_.end(), v);
  if (it == primes_.end()) return std::nullopt;
  return *it;
}

namespace {

// (lo, hi] with rational endpoints -> closed integer range [a, b]
std::pair<Int, Int> integer_window(const Rat& lo_exclusive, const Rat& hi_inclusive) {
  Int a = floor_rat(lo_exclusive) + 1;
  Int b = floor_rat(hi_inclusive);
  return {a, b};
}

}  // namespace

std::optional<uint64_t> PrimeTable::smallest_in(const Rat& lo_exclusive,
                                                const Rat& hi_inclusive) const {
  auto [a, b] = integer_window(lo_exclusive, hi_inclusive);
  if (b < a) return std::nullopt;
  if (a < 0) a = 0;
  if (!b.fits_ulong_p() || b.get_ui() > limit_)
    throw InvalidInput("prime window reaches past sieve limit");
  auto it = std::lower_bound(primes_.begin(), primes_.end(), a.get_ui());
  if (it == primes_.end() || *it > b.get_ui()) return std::nullopt;
  return *it;
}

std::optional<uint64_t> PrimeTable::largest_in(const Rat& lo_exclusive,
                                               const Rat& hi_inclusive) const {
  auto [a, b] = integer_window(lo_exclusive, hi_inclusive);
  if (b < a) return std::nullopt;
  if (a < 0) a = 0;
  if (!b.fits_ulong_p() || b.get_ui() > limit_)
    throw InvalidInput("prime window reaches past sieve limit");
  auto it = std::upper_bound(primes_.begin(), primes_.end(), b.get_ui());
  if (it == primes_.begin()) return std::nullopt;
  --it;
  if (*it < a.get_ui()) return std::nullopt;
  return *it;
}

std::optional<uint64_t> PrimeTable::largest_in_closed(uint64_t lo, uint64_t hi) const {
  if (lo == 0) lo = 1;
  return largest_in(Rat(static_cast<unsigned long>(lo - 1)), Rat(static_cast<unsigned long>(hi)));
}

uint64_t bertrand_prime(const PrimeTable& table, uint64_t n) {
  if (n < 2) throw InvalidInput("Bertrand witness needs n >= 2");
  auto p = table.largest_in(Rat(static_cast<unsigned long>(n)) / 2, Rat(static_cast<unsigned long>(n)));
  if (!p) throw NotFound("no prime in (n/2, n] for n = " + std::to_string(n));
  return *p;
}

uint64_t dusart_prime(const PrimeTable& table, const Rat& x) {
  if (x < 3275) throw InvalidInput("window requires x >= 3275");
  // conservative upper endpoint: lower bound of x*(1 + 1/(2 log^2 x))
  Enclosure lg = log_enclosure(x, make_rat(1, 1000000000));
  Rat upper_lo = x * (1 + 1 / (2 * lg.hi * lg.hi));
  auto p = table.largest_in(x, upper_lo);
  if (!p)
    throw NotFound("no prime found in the window above " + rat_string(x) +
                   "; sieve limit or window violation");
  return *p;
}

bool window_k_admissible(uint64_t n, uint64_t k) {
  // k <= (e/2) log(2n+1) + e: the right side is irrational, so the
  // comparison always decides at some width.
  Rat arg(2 * static_cast<unsigned long>(n) + 1);
  return !decide_less(
      [&](const Rat& w) {
        Enclosure e = e_enclosure(w);
        Enclosure lg = log_enclosure(arg, w);
        return e * lg * make_rat(1, 2) + e;
      },
      [&](const Rat&) { return Enclosure::point(Rat(static_cast<unsigned long>(k))); },
      "window admissibility threshold");
}

std::optional<uint64_t> find_window_prime(const PrimeTable& table, uint64_t n, uint64_t k) {
  if (k < 1 || n < 1) throw InvalidInput("window needs n, k >= 1");
  Rat lo = Rat(2 * static_cast<unsigned long>(n)) / Rat(2 * static_cast<unsigned long>(k) + 1);
  Rat hi = Rat(static_cast<unsigned long>(n)) / Rat(static_cast<unsigned long>(k));
  Rat cursor = lo;
  for (;;) {
    std::optional<uint64_t> p = table.smallest_in(cursor, hi);
    if (!p) return std::nullopt;
    if (*p > 2 * k) return p;
    cursor = Rat(static_cast<unsigned long>(*p));
  }
}

uint64_t scaled_window_prime(const PrimeTable& table, uint64_t n, uint64_t k) {
  if (n <= 62801) throw PreconditionFailed("window search requires n > 62801");
  if (!window_k_admissible(n, k))
    throw PreconditionFailed("k = " + std::to_string(k) + " exceeds the admissible range for n = " +
                             std::to_string(n));
  auto p = find_window_prime(table, n, k);
  if (!p)
    throw NotFound("window (n/(k+1/2), n/k] holds no prime > 2k for n = " + std::to_string(n) +
                   ", k = " + std::to_string(k));
  return *p;
}

std::pair<uint64_t, uint64_t> threshold_prime_pair(const PrimeTable& table, unsigned k) {
  if (k < 2 || k > 18) throw InvalidInput("threshold pair defined for 2 <= k <= 18");
  if (table.count() < 6302) throw InvalidInput("prime table too small (need 6302 primes)");
  for (size_t j = 6302; j >= 2; --j) {
    uint64_t pj = table.nth(j);
    uint64_t pj1 = table.nth(j - 1);
    // k*p_j >= (k + 1/2)*p_{j-1}  <=>  2k*p_j >= (2k+1)*p_{j-1}
    if (2 * static_cast<uint64_t>(k) * pj >= (2 * static_cast<uint64_t>(k) + 1) * pj1)
      return {pj, static_cast<uint64_t>(k) * pj - 1};
  }
  throw NotFound("no threshold prime for k = " + std::to_string(k));
}

uint64_t qn_prime(const PrimeTable& table, uint64_t n) {
  if (n < 48 || n > 1191) throw InvalidInput("q_n defined for 48 <= n <= 1191");
  uint64_t target = 2 * n - 1;
  auto q = table.largest_in_closed(target - 46, target - 14);
  if (!q) throw NotFound("no prime q with 14 <= (2n-1)-q <= 46 for n = " + std::to_string(n));
  if (*q < 53 || !(*q < target && target < 2 * *q))
    throw Falsified("q_n postcondition failed for n = " + std::to_string(n));
  return *q;
}

uint64_t ln_prime(const PrimeTable& table, uint64_t n) {
  if (n < 12 || n > 47) throw InvalidInput("l_n defined for 12 <= n <= 47");
  auto l = table.largest_in_closed(2 * n - 11, 2 * n - 7);
  if (!l) throw NotFound("no prime in [2n-11, 2n-7] for n = " + std::to_string(n));
  if (*l < 13 || *l > 83 || !(*l < 2 * n - 1 && 2 * n - 1 < 2 * *l))
    throw Falsified("l_n postcondition failed for n = " + std::to_string(n));
  return *l;
}

uint64_t max_prime_gap(const PrimeTable& table, size_t upto_index) {
  if (upto_index < 2) throw InvalidInput("gap scan needs index >= 2");
  if (upto_index > table.count()) throw InvalidInput("index beyond table");
  uint64_t best = 0;
  for (size_t i = 2; i <= upto_index; ++i)
    best = std::max(best, table.nth(i) - table.nth(i - 1));
  return best;
}

}  // namespace mrs
