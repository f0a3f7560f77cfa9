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
#include <sstream>

#include "errors.hpp"
#include "poly.hpp"

using namespace mrs;

namespace {

std::vector<Int> coeffs(std::initializer_list<long> cs) {
  std::vector<Int> out;
  for (long c : cs) out.emplace_back(c);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("parse reads the term grammar") {
  CHECK(Polynomial::parse("2x-1").coefficients() == coeffs({-1, 2}));
  CHECK(Polynomial::parse("x^2+1").coefficients() == coeffs({1, 0, 1}));
  CHECK(Polynomial::parse("x^3").coefficients() == coeffs({0, 0, 0, 1}));
  CHECK(Polynomial::parse(" 3 * x ^ 2 + 2 ").coefficients() == coeffs({2, 0, 3}));
  CHECK(Polynomial::parse("-x+5").coefficients() == coeffs({5, -1}));
  CHECK(Polynomial::parse("x+x").coefficients() == coeffs({0, 2}));
  CHECK(Polynomial::parse("7").coefficients() == coeffs({7}));
  CHECK(Polynomial::parse("0").is_zero());
  CHECK(Polynomial::parse("x^2-x^2").is_zero());
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Polynomial::parse(""), InvalidInput);
  CHECK_THROWS_AS(Polynomial::parse("x^"), InvalidInput);
  CHECK_THROWS_AS(Polynomial::parse("2**x"), InvalidInput);
  CHECK_THROWS_AS(Polynomial::parse("x+"), InvalidInput);
  CHECK_THROWS_AS(Polynomial::parse("*x"), InvalidInput);
  CHECK_THROWS_AS(Polynomial::parse("x x"), InvalidInput);
  CHECK_THROWS_AS(Polynomial::parse("x^9999999"), InvalidInput);
}

TEST_CASE("evaluation spot values") {
  CHECK(Polynomial::parse("x^2+1").eval(Int(2)) == 5);
  CHECK(Polynomial::parse("2x-1").eval(Int(5)) == 9);
  CHECK(Polynomial::parse("x^3").eval(Int(10)) == 1000);
}

TEST_CASE("parse then eval agrees with direct arithmetic on random polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg_dist(0, 6);
  std::uniform_int_distribution<long> coeff_dist(-9, 9);
  std::uniform_int_distribution<long> x_dist(0, 50);
  int nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int deg = deg_dist(rng);
    std::vector<Int> cs(deg + 1);
    for (auto& c : cs) c = coeff_dist(rng);
    // render with a mix of the accepted spellings
    std::ostringstream text;
    bool first = true;
    for (int i = deg; i >= 0; --i) {
      if (cs[i] == 0) continue;
      long c = cs[i].get_si();
      if (!first)
        text << (c < 0 ? "-" : "+");
      else if (c < 0)
        text << "-";
      first = false;
      long a = c < 0 ? -c : c;
      if (i == 0) {
        text << a;
      } else {
        if (a != 1) text << a << (trial % 2 ? "*" : "");
        text << "x";
        if (i != 1) text << "^" << i;
      }
    }
    if (first) continue;  // zero polynomial; formatting above skips it
    ++nontrivial;
    Polynomial f = Polynomial::parse(text.str());
    Int x(x_dist(rng));
    Int direct = 0, power = 1;
    for (int i = 0; i <= deg; ++i) {
      direct += cs[i] * power;
      power *= x;
    }
    CAPTURE(text.str());
    CHECK(f.eval(x) == direct);
  }
  CHECK(nontrivial > 80);
}

TEST_CASE("canonical display form") {
  CHECK(Polynomial::parse("2x-1").str() == "2x-1");
  CHECK(Polynomial::parse("x^2+1").str() == "x^2+1");
  CHECK(Polynomial::parse("1*x^3").str() == "x^3");
  CHECK(Polynomial::parse("0").str() == "0");
  // round trip
  for (const char* text : {"2x-1", "x^2+1", "x^3", "3x^2+2", "x^2+2x+1", "-x+5"}) {
    Polynomial f = Polynomial::parse(text);
    CHECK(Polynomial::parse(f.str()) == f);
  }
}

TEST_CASE("classification follows the case structure") {
  CHECK(std::holds_alternative<XSquaredPlusOne>(classify(Polynomial::parse("x^2+1"))));
  auto lin = classify(Polynomial::parse("2x-1"));
  REQUIRE(std::holds_alternative<Linear>(lin));
  CHECK(std::get<Linear>(lin).a == 2);
  CHECK(std::get<Linear>(lin).b == -1);
  auto root = classify(Polynomial::parse("x-3"));
  REQUIRE(std::holds_alternative<VanishesOnPositiveInteger>(root));
  CHECK(std::get<VanishesOnPositiveInteger>(root).witness == 3);
  auto xm = classify(Polynomial::parse("x^4"));
  REQUIRE(std::holds_alternative<MonomialXPower>(xm));
  CHECK(std::get<MonomialXPower>(xm).degree == 4);
  auto mono = classify(Polynomial::parse("3x^2"));
  REQUIRE(std::holds_alternative<Monomial>(mono));
  CHECK(std::get<Monomial>(mono).coeff == 3);
  CHECK(std::get<Monomial>(mono).degree == 2);
  CHECK(std::holds_alternative<DegreeAtLeastTwoMultiterm>(classify(Polynomial::parse("x^2+x"))));
  CHECK(std::holds_alternative<HasNegativeCoefficient>(classify(Polynomial::parse("x^2-x+1"))));
  CHECK(std::holds_alternative<VanishesOnPositiveInteger>(classify(Polynomial::parse("x^2-x"))));
  CHECK_THROWS_AS(classify(Polynomial::parse("0")), InvalidInput);
}

TEST_CASE("vanishing classification matches actual roots") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> root_dist(1, 40);
  std::uniform_int_distribution<long> coeff_dist(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    long w = root_dist(rng);
    // f = (x - w) * (c1 x + c0), c0, c1 > 0: unique positive root w
    long c1 = coeff_dist(rng), c0 = coeff_dist(rng);
    std::vector<Int> cs = {Int(-w * c0), Int(c0 - w * c1), Int(c1)};
    Polynomial f{cs};
    auto cls = classify(f);
    REQUIRE(std::holds_alternative<VanishesOnPositiveInteger>(cls));
    Int witness = std::get<VanishesOnPositiveInteger>(cls).witness;
    CHECK(f.eval(witness) == 0);
    Int c0abs = cs[0] < 0 ? Int(-cs[0]) : cs[0];
    CHECK(witness <= std::max(Int(1), c0abs));
  }
  // and polynomials without positive roots never classify as vanishing
  for (const char* text : {"x^2+1", "2x-1", "x^2+2x+1", "3x+2", "x^3+x"}) {
    CHECK(!std::holds_alternative<VanishesOnPositiveInteger>(classify(Polynomial::parse(text))));
  }
}

TEST_CASE("parser rejects garbage without crashing") {
  std::mt19937_64 rng(99);
  const std::string alphabet = "0123456789x^*+- ()e./";
  std::uniform_int_distribution<size_t> len_dist(1, 20);
  std::uniform_int_distribution<size_t> ch_dist(0, alphabet.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    size_t len = len_dist(rng);
    for (size_t i = 0; i < len; ++i) text += alphabet[ch_dist(rng)];
    try {
      Polynomial f = Polynomial::parse(text);
      // accepted input must re-parse to the same polynomial
      CHECK(Polynomial::parse(f.str()) == f);
    } catch (const InvalidInput&) {
      // fine: malformed
    }
  }
}

TEST_CASE("shifted linear parametrization") {
  auto s = shifted_linear_form(Polynomial::parse("2x-1"));
  REQUIRE(s.has_value());
  CHECK(s->a == 2);
  CHECK(s->b == 1);  // 2x-1 = 2x + (1-2)
  auto t = shifted_linear_form(Polynomial::parse("x+1"));
  REQUIRE(t.has_value());
  CHECK(t->a == 1);
  CHECK(t->b == 2);
  CHECK(!shifted_linear_form(Polynomial::parse("x-5")).has_value());  // b = -4
  CHECK(!shifted_linear_form(Polynomial::parse("x^2+1")).has_value());
}

TEST_SUITE_END();
