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

#include "certify.hpp"
#include "errors.hpp"

using namespace mrs;

namespace {

const PrimeTable& table() {
  static const PrimeTable t;
  return t;
}

CertifyContext ctx() {
  CertifyContext c;
  c.table = &table();
  return c;
}

SumSpec spec_of(const char* f, std::vector<unsigned long> s, uint64_t n, SumMode mode) {
  return SumSpec(Polynomial::parse(f), ExponentTuple(std::move(s)), n, mode);
}

// every claim a certificate makes must hold of the exact value
void check_sound(const Certificate& cert) {
  Rat value = compute_exact(cert.spec);
  switch (cert.kind) {
    case CertKind::ValuationNegative: {
      long v = valuation(value, Int(static_cast<unsigned long>(cert.prime)));
      if (cert.valuation_exact)
        CHECK(v == cert.valuation);
      else
        CHECK(v <= cert.valuation);
      CHECK(v < 0);
      break;
    }
    case CertKind::BoundBelowOne:
      CHECK(value > 0);
      CHECK(value < 1);
      break;
    case CertKind::StrictlyBetween:
      CHECK(Rat(cert.lower_int) < value);
      CHECK(value < Rat(cert.upper_int));
      CHECK(cert.upper_int == cert.lower_int + 1);
      break;
    case CertKind::IntegerException:
      REQUIRE(cert.integer_value.has_value());
      CHECK(value == Rat(*cert.integer_value));
      break;
  }
  if (cert.exact_value) CHECK(*cert.exact_value == value);
}

}  // namespace

TEST_SUITE_BEGIN("certify");

TEST_CASE("window valuation certificates") {
  auto c1 = window_valuation_certificate(ctx(), ExponentTuple({1}), 5, 1);
  CHECK(c1.prime == 5);
  CHECK(c1.valuation == -1);
  CHECK(c1.cross_checked);
  check_sound(c1);

  auto c2 = window_valuation_certificate(ctx(), ExponentTuple({2, 1}), 57, 2);
  CHECK(c2.prime == 23);
  CHECK(c2.valuation == -3);
  check_sound(c2);

  CHECK_THROWS_AS(window_valuation_certificate(ctx(), ExponentTuple::ones(5), 10, 5),
                  NoQualifyingPrime);
}

TEST_CASE("star Bertrand valuation certificates") {
  auto c1 = star_bertrand_certificate(ctx(), ExponentTuple({1}), 2);
  CHECK(c1.prime == 3);
  CHECK(c1.valuation == -1);
  CHECK(*c1.exact_value == make_rat(4, 3));
  check_sound(c1);

  auto c2 = star_bertrand_certificate(ctx(), ExponentTuple({1, 1}), 2);
  CHECK(c2.prime == 3);
  CHECK(c2.valuation == -2);
  CHECK(*c2.exact_value == make_rat(13, 9));
  check_sound(c2);

  auto c3 = star_bertrand_certificate(ctx(), ExponentTuple({2, 1}), 5);
  CHECK(c3.prime == 7);
  CHECK(c3.valuation == -3);
  check_sound(c3);
}

TEST_CASE("monomial valuation certificates") {
  auto c1 = monomial_certificate(ctx(), spec_of("x", {1, 1}, 4, SumMode::Star));
  CHECK(c1.prime == 3);
  CHECK(c1.valuation == -2);
  check_sound(c1);

  auto c2 = monomial_certificate(ctx(), spec_of("x^2", {1}, 3, SumMode::Strict));
  CHECK(c2.prime == 3);
  CHECK(c2.valuation == -2);  // v_3(49/36)
  CHECK(*c2.exact_value == make_rat(49, 36));
  check_sound(c2);

  // the leading coefficient can absorb extra powers of p
  auto c3 = monomial_certificate(ctx(), spec_of("3x^2", {1, 2}, 4, SumMode::Star));
  CHECK(c3.prime == 3);
  check_sound(c3);

  CHECK_THROWS_AS(monomial_certificate(ctx(), spec_of("x", {1, 1}, 4, SumMode::Strict)),
                  PreconditionFailed);
}

TEST_CASE("q_n split certificates") {
  auto c1 = qn_split_certificate(ctx(), ExponentTuple({30, 1}), 48, 2);
  CHECK(c1.prime == 79);
  CHECK(c1.cross_checked);
  CHECK(c1.valuation <= -2);
  check_sound(c1);

  CHECK_THROWS_AS(qn_split_certificate(ctx(), ExponentTuple({29, 1}), 48, 2), PreconditionFailed);
  CHECK_THROWS_AS(qn_split_certificate(ctx(), ExponentTuple({30, 2}), 48, 2), PreconditionFailed);
  CHECK_THROWS_AS(qn_split_certificate(ctx(), ExponentTuple({30, 1}), 47, 2), PreconditionFailed);

  // beyond the exact budget the certificate is structural: v <= -2
  std::vector<unsigned long> s{30, 1, 1, 1, 1, 1, 1, 1};
  auto c2 = qn_split_certificate(ctx(), ExponentTuple(s), 1191, 8);
  CHECK(!c2.cross_checked);
  CHECK(!c2.valuation_exact);
  CHECK(c2.valuation == -2);
  CHECK(c2.bound.has_value());
  CHECK(c2.bound->verdict == Verdict::Holds);
}

TEST_CASE("l_n split certificates") {
  auto c1 = ln_split_certificate(ctx(), ExponentTuple({7, 1}), 12, 2);
  CHECK(c1.prime == 17);
  CHECK(c1.valuation <= -2);
  CHECK(c1.cross_checked);
  check_sound(c1);

  auto c2 = ln_split_certificate(ctx(), ExponentTuple({7, 1, 1, 1}), 47, 4);
  CHECK(c2.prime == 83);
  CHECK(c2.valuation <= -2);
  check_sound(c2);

  CHECK_THROWS_AS(ln_split_certificate(ctx(), ExponentTuple({6, 1}), 12, 2), PreconditionFailed);
}

TEST_CASE("small-n special certificates") {
  auto c1 = small_n_certificate(ctx(), ExponentTuple({2, 1}), 5);
  CHECK(c1.prime == 7);
  CHECK(c1.valuation == -2);
  check_sound(c1);

  auto c2 = small_n_certificate(ctx(), ExponentTuple({3, 1}), 6);
  CHECK(c2.prime == 3);
  CHECK(c2.valuation == -6);
  check_sound(c2);

  auto c3 = small_n_certificate(ctx(), ExponentTuple({3, 1}), 9);
  CHECK(c3.prime == 3);
  CHECK(c3.valuation == -7);
  check_sound(c3);

  CHECK_THROWS_AS(small_n_certificate(ctx(), ExponentTuple({2, 1}), 6), PreconditionFailed);
  CHECK_THROWS_AS(small_n_certificate(ctx(), ExponentTuple({2, 1}), 2), PreconditionFailed);
  CHECK_THROWS_AS(small_n_certificate(ctx(), ExponentTuple({1, 1}), 5), PreconditionFailed);
}

TEST_CASE("certify reproduces the documented outcomes") {
  auto c1 = certify(ctx(), spec_of("x^2+1", {1, 1}, 2, SumMode::Star));
  CHECK(c1.kind == CertKind::BoundBelowOne);
  CHECK(*c1.exact_value == make_rat(39, 100));

  auto c2 = certify(ctx(), spec_of("2x-1", {1}, 1, SumMode::Strict));
  CHECK(c2.kind == CertKind::IntegerException);
  CHECK(*c2.integer_value == 1);

  auto c3 = certify(ctx(), spec_of("x^2+1", {1}, 13, SumMode::Star));
  CHECK(c3.kind == CertKind::StrictlyBetween);
  CHECK(c3.lower_int == 1);
  CHECK(c3.upper_int == 2);

  // s_1 = 2 at n = 6 goes through the exact route: H = 31679/33075 in (0,1)
  // (the -2s_1 three-adic formula needs s_1 >= 3; at s_1 = 2 the actual
  // 3-adic valuation is -3, not -4)
  auto c4 = certify(ctx(), spec_of("2x-1", {2, 1}, 6, SumMode::Strict));
  CHECK(c4.kind == CertKind::BoundBelowOne);
  CHECK(*c4.exact_value == make_rat(31679, 33075));
  CHECK(valuation(*c4.exact_value, Int(3)) == -3);

  auto c5 = certify(ctx(), spec_of("2x-1", {3, 1}, 6, SumMode::Strict));
  CHECK(c5.kind == CertKind::ValuationNegative);
  CHECK(c5.prime == 3);
  CHECK(c5.valuation == -6);

  auto c6 = certify(ctx(), spec_of("x", {1, 1}, 3, SumMode::Strict));
  CHECK(c6.kind == CertKind::IntegerException);

  auto c7 = certify(ctx(), spec_of("x^3", {5}, 1, SumMode::Star));
  CHECK(c7.kind == CertKind::IntegerException);

  auto c8 = certify(ctx(), spec_of("3x^2", {2}, 1, SumMode::Star));
  CHECK(c8.kind == CertKind::BoundBelowOne);  // 1/9

  CHECK_THROWS_AS(certify(ctx(), spec_of("3x+2", {1, 1}, 5, SumMode::Strict)), Unsupported);
  CHECK_THROWS_AS(certify(ctx(), spec_of("x-50", {1}, 5, SumMode::Strict)), Unsupported);
  CHECK_THROWS_AS(certify(ctx(), spec_of("x^2-x+1", {1}, 5, SumMode::Strict)), Unsupported);
}

TEST_CASE("certificates are sound on a sampled grid") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<unsigned long> exp_dist(1, 3);
  const char* polys[] = {"x", "2x-1", "x^2+1", "x^2+2x+1", "x^3+x", "3x^2+2"};
  int checked = 0;
  for (const char* f : polys) {
    for (uint64_t n = 1; n <= 16; ++n) {
      for (uint64_t k = 1; k <= n; ++k) {
        for (SumMode mode : {SumMode::Strict, SumMode::Star}) {
          std::vector<std::vector<unsigned long>> tuples = {
              std::vector<unsigned long>(k, 1), std::vector<unsigned long>(k, 2)};
          for (int r = 0; r < 3; ++r) {
            std::vector<unsigned long> t(k);
            for (auto& e : t) e = exp_dist(rng);
            tuples.push_back(t);
          }
          for (auto& t : tuples) {
            SumSpec spec = spec_of(f, t, n, mode);
            Certificate cert = certify(ctx(), spec);
            CAPTURE(f);
            CAPTURE(n);
            CAPTURE(k);
            check_sound(cert);
            ++checked;
            bool integer = cert.kind == CertKind::IntegerException;
            CHECK(integer == is_expected_integer_exception(spec));
          }
        }
      }
    }
  }
  CHECK(checked > 5000);
}

TEST_CASE("independent strategies agree where they overlap") {
  // all exponents >= 2 gives both the square-domination bound and, when a
  // window prime exists, the valuation route; check the two claims against
  // the same exact value
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<unsigned long> exp_dist(2, 3);
  std::uniform_int_distribution<uint64_t> n_dist(10, 60);
  int overlaps = 0;
  while (overlaps < 100) {
    uint64_t n = n_dist(rng);
    std::uniform_int_distribution<uint64_t> k_dist(2, 6);
    uint64_t k = std::min(k_dist(rng), n);
    auto p = find_window_prime(table(), n, k);
    if (!p) continue;
    std::vector<unsigned long> t(k);
    for (auto& e : t) e = exp_dist(rng);
    SumSpec spec = spec_of("2x-1", t, n, SumMode::Strict);
    Rat value = compute_exact(spec);

    BoundReport sq = strict_square_below_one(k);
    REQUIRE(sq.verdict == Verdict::Holds);
    CHECK(value > 0);
    CHECK(value < 1);  // claim certified by the bound route

    auto cert = window_valuation_certificate(ctx(), spec.s, n, k);
    CHECK(cert.prime == *p);
    CHECK(valuation(value, Int(static_cast<unsigned long>(*p))) == cert.valuation);
    ++overlaps;
  }
}

TEST_CASE("expected exception set predicate") {
  CHECK(is_expected_integer_exception(spec_of("x", {1}, 1, SumMode::Strict)));
  CHECK(is_expected_integer_exception(spec_of("x^7", {4}, 1, SumMode::Star)));
  CHECK(is_expected_integer_exception(spec_of("2x-1", {9}, 1, SumMode::Star)));
  CHECK(is_expected_integer_exception(spec_of("x", {1, 1}, 3, SumMode::Strict)));
  CHECK(!is_expected_integer_exception(spec_of("x", {1, 1}, 3, SumMode::Star)));
  CHECK(!is_expected_integer_exception(spec_of("x", {1, 2}, 3, SumMode::Strict)));
  CHECK(!is_expected_integer_exception(spec_of("3x^2", {1}, 1, SumMode::Strict)));
}

TEST_SUITE_END();
