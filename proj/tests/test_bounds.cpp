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

#include <doctest.h>

#include <random>

#include "bounds.hpp"
#include "errors.hpp"
#include "primes.hpp"
#include "sums.hpp"

using namespace mrs;

namespace {

// independent oracle: the double sum itself, summed term by term
Rat exact_double_sum(unsigned m, unsigned a, unsigned b, unsigned n) {
  Rat total = 0;
  for (unsigned i = m; i < n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) {
      Rat term(1, ipow(Int(i), a) * ipow(Int(j), b));
      term.canonicalize();
      total += term;
    }
  return total;
}

}  // namespace

TEST_SUITE_BEGIN("bounds");

TEST_CASE("pair-sum bound spot values") {
  Enclosure b1 = double_sum_zeta_bound(1, 2, 2, make_rat(1, 100000));
  CHECK(b1.contains(parse_rat("0.8117424252")));  // (zeta(2)^2 - zeta(4))/2
  Enclosure b3 = double_sum_zeta_bound(3, 2, 2, make_rat(1, 100000));
  CHECK(b3.contains(parse_rat("0.06807484172")));
  CHECK_THROWS_AS(double_sum_zeta_bound(1, 1, 2, Rat(1)), InvalidInput);
}

TEST_CASE("pair-sum bound dominates the exact double sums") {
  for (unsigned m : {1u, 2u, 3u}) {
    for (unsigned a : {2u, 3u}) {
      for (unsigned b : {2u, 3u, 4u}) {
        if (a > b) continue;
        Enclosure bound = double_sum_zeta_bound(m, a, b, make_rat(1, 1000000000));
        for (unsigned n = m + 1; n <= 30; ++n) {
          CAPTURE(m);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(n);
          CHECK(exact_double_sum(m, a, b, n) < bound.lo);
        }
      }
    }
  }
}

TEST_CASE("below-one threshold classification") {
  CHECK(below_one_threshold(Int(2), Int(1), 100, 10) == ThresholdKind::LargeK);
  CHECK(below_one_threshold(Int(2), Int(1), 100, 9) == ThresholdKind::Neither);
  CHECK(below_one_threshold(Int(1), Int(1), 1, 1) == ThresholdKind::SmallN);
  // f = 3x-1 in shifted form: a=3, b=2; n <= (2/3)(e^3 - 1) ~ 12.72
  CHECK(below_one_threshold(Int(3), Int(2), 12, 2) == ThresholdKind::SmallN);
  CHECK_THROWS_AS(below_one_threshold(Int(0), Int(1), 5, 2), InvalidInput);
}

TEST_CASE("threshold hit implies the strict sum is below one") {
  struct Family {
    long a, b;
    const char* f;  // f(x) = a x + (b - a)
  };
  const Family families[] = {{2, 1, "2x-1"}, {1, 1, "x"}, {3, 2, "3x-1"}};
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<unsigned long> exp_dist(1, 3);
  int hits = 0;
  for (const auto& fam : families) {
    Polynomial f = Polynomial::parse(fam.f);
    for (uint64_t n = 2; n <= 40; ++n) {
      for (uint64_t k = 2; k <= n; ++k) {
        ThresholdKind kind = below_one_threshold(Int(fam.a), Int(fam.b), n, k);
        if (kind == ThresholdKind::Neither) continue;
        ++hits;
        std::vector<std::vector<unsigned long>> tuples = {
            std::vector<unsigned long>(k, 1), std::vector<unsigned long>(k, 2)};
        for (int r = 0; r < 3; ++r) {
          std::vector<unsigned long> t(k);
          for (auto& e : t) e = exp_dist(rng);
          tuples.push_back(t);
        }
        for (auto& t : tuples) {
          Rat value = compute_exact(SumSpec(f, ExponentTuple(t), n, SumMode::Strict));
          CAPTURE(fam.f);
          CAPTURE(n);
          CAPTURE(k);
          CHECK(value > 0);
          CHECK(value < 1);
        }
      }
    }
  }
  CHECK(hits > 100);
}

TEST_CASE("numerator power checks are exact integer comparisons") {
  BoundReport h53 = h1prime_power_check(53, 30);
  CHECK(h53.verdict == Verdict::Holds);
  CHECK(h1prime_power_check(53, 2).verdict == Verdict::Fails);
  CHECK(h1prime_power_check(97, 30).verdict == Verdict::Holds);

  BoundReport l13 = h3prime_power_check(13, 7);
  CHECK(l13.verdict == Verdict::Holds);
  CHECK(l13.lhs.lo == Rat(2798410));   // 10 * 23^4
  CHECK(l13.rhs.lo == Rat(4826809));   // 13^6
  CHECK(h3prime_power_check(13, 6).verdict == Verdict::Fails);
  CHECK(h3prime_power_check(83, 7).verdict == Verdict::Holds);
  CHECK_THROWS_AS(h1prime_power_check(52, 30), InvalidInput);
  CHECK_THROWS_AS(h3prime_power_check(11, 7), InvalidInput);
}

TEST_CASE("power checks hold over the full prime ranges") {
  PrimeTable table(3000);
  for (uint64_t q : table.primes()) {
    if (q < 53) continue;
    if (q > 2381) break;
    CHECK(h1prime_power_check(q, 30).verdict == Verdict::Holds);
  }
  for (uint64_t l : table.primes()) {
    if (l < 13) continue;
    if (l > 83) break;
    CHECK(h3prime_power_check(l, 7).verdict == Verdict::Holds);
  }
}

TEST_CASE("case inequality suite all hold") {
  auto reports = case_inequality_suite();
  CHECK(reports.size() >= 10);
  for (const auto& r : reports) {
    CAPTURE(r.claim);
    CHECK(r.verdict == Verdict::Holds);
  }
}

TEST_CASE("square-domination bounds certify below one for k >= 2") {
  for (uint64_t k : {2ull, 3ull, 4ull, 7ull, 12ull, 40ull}) {
    BoundReport r = strict_square_below_one(k);
    CAPTURE(k);
    CHECK(r.verdict == Verdict::Holds);
  }
  // sanity: the k = 2 bound is the supremum of the exact double sums
  BoundReport r2 = strict_square_below_one(2);
  CHECK(exact_double_sum(1, 2, 2, 30) < r2.lhs.hi);
  CHECK_THROWS_AS(strict_square_below_one(1), InvalidInput);
}

TEST_CASE("harmonic power partial sums") {
  CHECK(harmonic_power_partial(0, 2) == 0);
  CHECK(harmonic_power_partial(3, 2) == make_rat(49, 36));
  CHECK(harmonic_power_partial(2, 3) == make_rat(9, 8));
}

TEST_SUITE_END();
