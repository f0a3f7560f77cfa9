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

#include "enclosure.hpp"
#include "errors.hpp"

using namespace mrs;

namespace {

Rat w(long num, long den) { return make_rat(num, den); }

void check_nested(const Enclosure& wide, const Enclosure& tight) {
  CHECK(tight.lo >= wide.lo);
  CHECK(tight.hi <= wide.hi);
}

}  // namespace

TEST_SUITE_BEGIN("enclosure");

TEST_CASE("interval arithmetic is outward") {
  Enclosure a(w(1, 2), w(3, 4));
  Enclosure b(w(-1, 3), w(1, 3));
  Enclosure sum = a + b;
  CHECK(sum.lo == w(1, 6));
  CHECK(sum.hi == w(13, 12));
  Enclosure prod = a * b;
  CHECK(prod.lo == w(-1, 4));
  CHECK(prod.hi == w(1, 4));
  Enclosure sq = square(b);
  CHECK(sq.lo == 0);
  CHECK(sq.hi == w(1, 9));
  CHECK_THROWS(reciprocal(b));  // contains zero
  Enclosure r = reciprocal(a);
  CHECK(r.lo == w(4, 3));
  CHECK(r.hi == 2);
}

TEST_CASE("dyadic rounding rounds outward") {
  Rat v = w(1, 3);
  CHECK(dyadic_floor(v, 8) <= v);
  CHECK(dyadic_ceil(v, 8) >= v);
  CHECK(dyadic_ceil(v, 8) - dyadic_floor(v, 8) <= w(1, 128));
  CHECK(dyadic_floor(w(5, 4), 2) == w(5, 4));  // already dyadic
  Enclosure e = round_out(Enclosure(v, v), 8);
  CHECK(e.contains(v));
}

TEST_CASE("zeta enclosures bracket the true values") {
  Enclosure z2 = zeta_enclosure(2, w(1, 100));
  CHECK(z2.width() <= w(1, 100));
  CHECK(z2.contains(parse_rat("1.6449340668")));
  Enclosure z4 = zeta_enclosure(4, w(1, 1000));
  CHECK(z4.width() <= w(1, 1000));
  CHECK(z4.contains(parse_rat("1.0823232337")));
  Enclosure z3 = zeta_enclosure(3, w(1, 100000));
  CHECK(z3.contains(parse_rat("1.2020569")));
  CHECK_THROWS_AS(zeta_enclosure(1, w(1, 10)), InvalidInput);
}

TEST_CASE("zeta(2) enclosures stay inside [1, 2] at every width") {
  for (auto width : {Rat(10), Rat(1), w(1, 10), w(1, 10000), w(1, 1000000)}) {
    Enclosure z = zeta_enclosure(2, width);
    CHECK(z.lo >= 1);
    CHECK(z.hi <= 2);
  }
}

TEST_CASE("tightening widths gives nested enclosures") {
  Rat widths[] = {w(1, 100), w(1, 1000), w(1, 10000), w(1, 100000)};
  for (size_t i = 0; i + 1 < 4; ++i) {
    check_nested(zeta_enclosure(2, widths[i]), zeta_enclosure(2, widths[i + 1]));
    check_nested(zeta_enclosure(5, widths[i]), zeta_enclosure(5, widths[i + 1]));
    check_nested(e_enclosure(widths[i]), e_enclosure(widths[i + 1]));
    check_nested(log_enclosure(Rat(2), widths[i]), log_enclosure(Rat(2), widths[i + 1]));
    check_nested(log_enclosure(w(7, 3), widths[i]), log_enclosure(w(7, 3), widths[i + 1]));
    check_nested(exp_enclosure(w(5, 2), widths[i]), exp_enclosure(w(5, 2), widths[i + 1]));
    check_nested(sqrt_enclosure(Rat(3), widths[i]), sqrt_enclosure(Rat(3), widths[i + 1]));
  }
}

TEST_CASE("e enclosures") {
  Enclosure one = e_enclosure(Rat(1));
  CHECK(one.lo >= 2);
  CHECK(one.hi <= 3);
  Enclosure fine = e_enclosure(w(1, 1000000));
  CHECK(fine.width() <= w(1, 1000000));
  CHECK(fine.contains(parse_rat("2.718281828459045")));
}

TEST_CASE("log enclosures") {
  Enclosure zero = log_enclosure(Rat(1), w(1, 100));
  CHECK(zero.lo == 0);
  CHECK(zero.hi == 0);
  Enclosure l2 = log_enclosure(Rat(2), w(1, 100));
  CHECK(l2.width() <= w(1, 100));
  CHECK(l2.contains(parse_rat("0.6931471805")));
  Enclosure l201 = log_enclosure(Rat(201), w(1, 10));
  CHECK(l201.contains(parse_rat("5.3033049080")));
  Enclosure lhalf = log_enclosure(w(1, 2), w(1, 1000));
  CHECK(lhalf.contains(parse_rat("-0.6931471805")));
  Enclosure lbig = log_enclosure(parse_rat("62801"), w(1, 1000000));
  CHECK(lbig.contains(parse_rat("11.04772627589")));
  CHECK_THROWS_AS(log_enclosure(Rat(0), w(1, 10)), InvalidInput);
}

TEST_CASE("exp and sqrt enclosures") {
  Enclosure e1 = exp_enclosure(Rat(1), w(1, 100000));
  CHECK(e1.contains(parse_rat("2.718281828")));
  Enclosure e0 = exp_enclosure(Rat(0), w(1, 10));
  CHECK(e0.lo == 1);
  CHECK(e0.hi == 1);
  Enclosure eneg = exp_enclosure(Rat(-1), w(1, 10000));
  CHECK(eneg.contains(parse_rat("0.3678794411")));
  CHECK(eneg.width() <= w(1, 10000));
  Enclosure s2 = sqrt_enclosure(Rat(2), w(1, 100000));
  CHECK(s2.contains(parse_rat("1.41421356237")));
  Enclosure s94 = sqrt_enclosure(w(9, 4), w(1, 1000));
  CHECK(s94.contains(w(3, 2)));
}

TEST_CASE("reciprocal polynomial series with tail bounds") {
  // sum over j of 1/(j^2+2); compare with an exact partial sum
  std::vector<Int> f{Int(2), Int(0), Int(1)};
  Enclosure s = reciprocal_poly_series(f, w(1, 100000));
  CHECK(s.width() <= w(1, 100000));
  Rat partial = 0;
  for (unsigned long j = 1; j <= 400; ++j) {
    Rat term(1, Int(j) * j + 2);
    term.canonicalize();
    partial += term;
  }
  CHECK(partial < s.hi);                 // partial sums stay below the total
  CHECK(partial + w(1, 399) > s.lo);     // and the tail is under 1/N
  CHECK(s.contains(parse_rat("0.8610281005737")));
  CHECK_THROWS_AS(reciprocal_poly_series({Int(1), Int(1)}, w(1, 10)), InvalidInput);
}

TEST_CASE("comparison driver decides strict inequalities") {
  auto c = [](const Rat& v) { return [v](const Rat&) { return Enclosure::point(v); }; };
  CHECK(decide_less(c(Rat(1)), c(Rat(2)), "1<2"));
  CHECK(!decide_less(c(Rat(2)), c(Rat(1)), "2<1"));
  CHECK(decide_less([](const Rat& width) { return zeta_enclosure(2, width); },
                    c(parse_rat("1.645")), "zeta2 < 1.645"));
  CompareOptions quick;
  quick.max_rounds = 3;
  CHECK_THROWS_AS(decide_less(c(Rat(1)), c(Rat(1)), "1<1", quick), Undecidable);
}

TEST_SUITE_END();
