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

#include "errors.hpp"
#include "rational.hpp"

using namespace mrs;

TEST_SUITE_BEGIN("rational");

TEST_CASE("parsing accepts integers, fractions, decimals and exponents") {
  CHECK(parse_rat("3/4") == make_rat(3, 4));
  CHECK(parse_rat("-3/4") == make_rat(-3, 4));
  CHECK(parse_rat("0.25") == make_rat(1, 4));
  CHECK(parse_rat("1e-3") == make_rat(1, 1000));
  CHECK(parse_rat("2.5e3") == make_rat(2500));
  CHECK(parse_rat(" 12 ") == make_rat(12));
  CHECK(parse_rat("6/8") == make_rat(3, 4));  // normalized
  CHECK_THROWS_AS(parse_rat(""), InvalidInput);
  CHECK_THROWS_AS(parse_rat("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rat("abc"), InvalidInput);
}

TEST_CASE("canonical form invariants") {
  Rat q = make_rat(6, -8);
  CHECK(q.get_den() > 0);
  Int g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  CHECK(g == 1);
  CHECK(make_rat(0, 5).get_den() == 1);
}

TEST_CASE("field arithmetic is exact on random pairs") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  std::uniform_int_distribution<long> pos(1, 1000000);
  for (int i = 0; i < 1000; ++i) {
    long a = dist(rng), c = dist(rng);
    long b = pos(rng), d = pos(rng);
    Rat x = make_rat(a, b), y = make_rat(c, d);
    // (a/b + c/d) * bd == ad + cb as integers
    Rat lhs = (x + y) * Rat(Int(b) * d);
    CHECK(lhs == Rat(Int(a) * d + Int(c) * b));
    CHECK(x * y * Rat(Int(b) * d) == Rat(Int(a) * c));
  }
}

TEST_CASE("valuation spot values") {
  CHECK(valuation(make_rat(3, 8), Int(2)) == -3);
  CHECK(valuation(make_rat(563, 315), Int(5)) == -1);  // 315 = 3^2 * 5 * 7
  CHECK(valuation(make_rat(9), Int(3)) == 2);
  CHECK(valuation(make_rat(49, 36), Int(3)) == -2);
  CHECK_THROWS_AS(valuation(Rat(0), Int(3)), InvalidInput);
  CHECK_THROWS_AS(valuation(make_rat(1, 2), Int(4)), InvalidInput);  // composite
}

TEST_CASE("valuation is additive over products") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(1, 100000);
  const Int p(7);
  for (int i = 0; i < 300; ++i) {
    Rat q1 = make_rat(dist(rng), dist(rng));
    Rat q2 = make_rat(dist(rng), dist(rng));
    CHECK(valuation(q1 * q2, p) == valuation(q1, p) + valuation(q2, p));
  }
}

TEST_CASE("valuation of sums is ultrametric") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> dist(1, 100000);
  const Int p(3);
  int equality_checked = 0;
  for (int i = 0; i < 500; ++i) {
    Rat q1 = make_rat(dist(rng), dist(rng));
    Rat q2 = make_rat(dist(rng), dist(rng));
    if (q1 + q2 == 0) continue;
    long v1 = valuation(q1, p), v2 = valuation(q2, p);
    long vs = valuation(q1 + q2, p);
    CHECK(vs >= std::min(v1, v2));
    if (v1 != v2) {
      CHECK(vs == std::min(v1, v2));
      ++equality_checked;
    }
  }
  CHECK(equality_checked > 50);
}

TEST_CASE("integer detection and decimal rendering") {
  CHECK(is_integer(make_rat(8, 4)));
  CHECK(*as_integer(make_rat(8, 4)) == 2);
  CHECK(!as_integer(make_rat(39, 100)));
  CHECK(decimal_string(make_rat(39, 100), 4) == "0.3900");
  CHECK(decimal_string(make_rat(-1, 3), 6) == "-0.333333");
  CHECK(decimal_string(make_rat(563, 315), 6) == "1.787301");
  CHECK(decimal_string(Rat(5), 0) == "5");
  CHECK(rat_string(make_rat(39, 100)) == "39/100");
  CHECK(rat_string(Rat(7)) == "7");
}

TEST_CASE("rational parser rejects garbage without crashing") {
  std::mt19937_64 rng(101);
  const std::string alphabet = "0123456789eE./-+ ";
  std::uniform_int_distribution<size_t> len_dist(1, 12);
  std::uniform_int_distribution<size_t> ch_dist(0, alphabet.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    size_t len = len_dist(rng);
    for (size_t i = 0; i < len; ++i) text += alphabet[ch_dist(rng)];
    try {
      Rat q = parse_rat(text);
      CHECK(q.get_den() > 0);  // canonical when accepted
    } catch (const InvalidInput&) {
    }
  }
}

TEST_CASE("floor and ceiling") {
  CHECK(floor_rat(make_rat(7, 2)) == 3);
  CHECK(ceil_rat(make_rat(7, 2)) == 4);
  CHECK(floor_rat(make_rat(-7, 2)) == -4);
  CHECK(ceil_rat(make_rat(-7, 2)) == -3);
  CHECK(floor_rat(Rat(5)) == 5);
  CHECK(ceil_rat(Rat(5)) == 5);
}

TEST_SUITE_END();
