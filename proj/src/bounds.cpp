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

#include "bounds.hpp"

#include <mutex>

#include "errors.hpp"

namespace mrs {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "undecided";
  }
}

const char* threshold_name(ThresholdKind t) {
  switch (t) {
    case ThresholdKind::SmallN: return "small-n";
    case ThresholdKind::LargeK: return "large-k";
    default: return "neither";
  }
}

BoundReport make_report(const std::string& claim, const Enclosure& lhs, const Enclosure& rhs) {
  BoundReport r{claim, lhs, rhs, Verdict::Undecided};
  if (lhs.hi < rhs.lo)
    r.verdict = Verdict::Holds;
  else if (lhs.lo > rhs.hi)
    r.verdict = Verdict::Fails;
  return r;
}

namespace {

using EnclosureFn = std::function<Enclosure(const Rat&)>;

BoundReport decided_report(const std::string& claim, const EnclosureFn& lhs,
                           const EnclosureFn& rhs) {
  Rat w = make_rat(1, 1000);
  BoundReport r;
  for (unsigned round = 0; round < 60; ++round) {
    r = make_report(claim, lhs(w), rhs(w));
    if (r.verdict != Verdict::Undecided) return r;
    w /= 10;
  }
  return r;  // still undecided; caller treats it as a failure
}

EnclosureFn constant(const Rat& v) {
  return [v](const Rat&) { return Enclosure::point(v); };
}

}  // namespace

Rat harmonic_power_partial(unsigned long s, unsigned long t) {
  Rat sum = 0;
  for (unsigned long i = 1; i <= s; ++i) {
    Rat term(1, ipow(Int(i), t));
    term.canonicalize();
    sum += term;
  }
  return sum;
}

Enclosure double_sum_zeta_bound(unsigned m, unsigned a, unsigned b, const Rat& width) {
  if (m < 1 || a < 2 || b < a) throw InvalidInput("bound needs m >= 1 and 2 <= a <= b");
  Rat ha = harmonic_power_partial(m - 1, a);
  Rat hb = harmonic_power_partial(m - 1, b);
  Rat hab = harmonic_power_partial(m - 1, static_cast<unsigned long>(a) + b);
  Rat w = width / 16;
  for (unsigned round = 0; round < 60; ++round) {
    Enclosure za = zeta_enclosure(a, w);
    Enclosure zb = zeta_enclosure(b, w);
    Enclosure zab = zeta_enclosure(static_cast<unsigned long>(a) + b, w);
    Enclosure out = (za * zb - zab - za * hb - zb * ha + Enclosure::point(ha * hb + hab)) *
                    make_rat(1, 2);
    if (out.width() <= width) return out;
    w /= 10;
  }
  throw Undecidable("pair-sum bound failed to reach requested width");
}

ThresholdKind below_one_threshold(const Int& a, const Int& b, uint64_t n, uint64_t k) {
  if (a < 1 || b < 1) throw InvalidInput("threshold parameters need a, b >= 1");
  if (n < 1 || k < 1) throw InvalidInput("threshold needs n, k >= 1");
  Rat ab(a, b);
  ab.canonicalize();
  Rat ba(b, a);
  ba.canonicalize();
  Rat twob2(2 * b * b + 1);

  // n <= (b/a)(e^{a(sqrt(2b^2+1)-1)/b} - 1)
  bool small_n = decide_less(constant(Rat(static_cast<unsigned long>(n))),
                             [&](const Rat& w) {
                               Enclosure s = sqrt_enclosure(twob2, w);
                               Enclosure arg = (s - Rat(1)) * ab;
                               Enclosure e = exp_enclosure(arg, w);
                               return (e - Rat(1)) * ba;
                             },
                             "small-n threshold");
  if (small_n) return ThresholdKind::SmallN;

  // k >= (e/a) log((an+b)/b) + e/b
  Rat arg = (Rat(a) * static_cast<unsigned long>(n) + Rat(b)) / Rat(b);
  Rat inv_a(1, a), inv_b(1, b);
  inv_a.canonicalize();
  inv_b.canonicalize();
  bool below = decide_less(constant(Rat(static_cast<unsigned long>(k))),
                           [&](const Rat& w) {
                             Enclosure e = e_enclosure(w);
                             Enclosure lg = log_enclosure(arg, w);
                             return e * lg * inv_a + e * inv_b;
                           },
                           "large-k threshold");
  if (!below) return ThresholdKind::LargeK;
  return ThresholdKind::Neither;
}

BoundReport h1prime_power_check(uint64_t q, unsigned long s1) {
  if (q < 53) throw InvalidInput("power check defined for q >= 53");
  if (s1 < 1) throw InvalidInput("s1 must be >= 1");
  Int lhs = Int(245157) * ipow(Int(static_cast<unsigned long>(q) + 46), 22);
  Int rhs = ipow(Int(static_cast<unsigned long>(q)), s1 - 1);
  return make_report("245157(q+46)^22 < q^(s1-1) [q=" + std::to_string(q) +
                         ", s1=" + std::to_string(s1) + "]",
                     Enclosure::point(Rat(lhs)), Enclosure::point(Rat(rhs)));
}

BoundReport h3prime_power_check(uint64_t l, unsigned long s1) {
  if (l < 13 || l > 83) throw InvalidInput("power check defined for 13 <= l <= 83");
  if (s1 < 1) throw InvalidInput("s1 must be >= 1");
  Int lhs = Int(10) * ipow(Int(static_cast<unsigned long>(l) + 10), 4);
  Int rhs = ipow(Int(static_cast<unsigned long>(l)), s1 - 1);
  return make_report("10(l+10)^4 < l^(s1-1) [l=" + std::to_string(l) +
                         ", s1=" + std::to_string(s1) + "]",
                     Enclosure::point(Rat(lhs)), Enclosure::point(Rat(rhs)));
}

namespace {

Rat square_plus_one_partial(unsigned long n) {
  Rat sum = 0;
  for (unsigned long i = 1; i <= n; ++i) {
    Rat term(1, Int(i) * i + 1);
    term.canonicalize();
    sum += term;
  }
  return sum;
}

}  // namespace

std::vector<BoundReport> case_inequality_suite() {
  std::vector<BoundReport> out;
  auto zeta = [](unsigned long s) {
    return [s](const Rat& w) { return zeta_enclosure(s, w); };
  };

  out.push_back(decided_report("1 < zeta(2)", constant(Rat(1)), zeta(2)));
  out.push_back(decided_report("zeta(2) < 2", zeta(2), constant(Rat(2))));

  std::vector<Int> jj2{Int(2), Int(0), Int(1)};  // x^2 + 2
  auto sum_jj2 = [jj2](const Rat& w) { return reciprocal_poly_series(jj2, w); };
  out.push_back(decided_report("1/2 < sum 1/(j^2+2)", constant(make_rat(1, 2)), sum_jj2));
  out.push_back(decided_report("sum 1/(j^2+2) < zeta(2) - 3/4", sum_jj2,
                               [&](const Rat& w) { return zeta_enclosure(2, w) - make_rat(3, 4); }));
  out.push_back(decided_report("zeta(2) - 3/4 < 1",
                               [&](const Rat& w) { return zeta_enclosure(2, w) - make_rat(3, 4); },
                               constant(Rat(1))));

  out.push_back(decided_report("sum_{i<=12} 1/(i^2+1) < 1",
                               constant(square_plus_one_partial(12)), constant(Rat(1))));
  out.push_back(decided_report("1 < sum_{i<=13} 1/(i^2+1)", constant(Rat(1)),
                               constant(square_plus_one_partial(13))));

  std::vector<Int> sq2{Int(1), Int(0), Int(2), Int(0), Int(1)};  // (x^2+1)^2
  out.push_back(decided_report("sum 1/(i^2+1)^2 < zeta(4) - 3/4",
                               [sq2](const Rat& w) { return reciprocal_poly_series(sq2, w); },
                               [&](const Rat& w) { return zeta_enclosure(4, w) - make_rat(3, 4); }));
  out.push_back(decided_report("zeta(4) - 3/4 < 1",
                               [&](const Rat& w) { return zeta_enclosure(4, w) - make_rat(3, 4); },
                               constant(Rat(1))));

  out.push_back(decided_report(
      "zeta(4)/2 + zeta(2)^2/2 - (11/20)zeta(2) - 21/100 < 1",
      [&](const Rat& w) {
        Enclosure z2 = zeta_enclosure(2, w);
        Enclosure z4 = zeta_enclosure(4, w);
        return z4 * make_rat(1, 2) + square(z2) * make_rat(1, 2) - z2 * make_rat(11, 20) -
               make_rat(21, 100);
      },
      constant(Rat(1))));

  out.push_back(decided_report("1/2 + 1/10 < 1", constant(make_rat(3, 5)), constant(Rat(1))));
  out.push_back(decided_report("zeta(2) - 137/180 < 1",
                               [&](const Rat& w) { return zeta_enclosure(2, w) - make_rat(137, 180); },
                               constant(Rat(1))));
  return out;
}

BoundReport strict_square_below_one(uint64_t k) {
  if (k < 2) throw InvalidInput("square-domination bound needs k >= 2");
  if (k == 2) {
    Rat w = make_rat(1, 1000000);
    Enclosure bound = double_sum_zeta_bound(1, 2, 2, w);
    return make_report("(zeta(2)^2 - zeta(4))/2 < 1 [k=2]", bound, Enclosure::point(Rat(1)));
  }
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  if (k >= 7) {
    // zeta(2)^k/k! < 2^k/k!, already far below one here
    Rat crude(Int(1) << static_cast<unsigned>(k), fact);
    crude.canonicalize();
    return make_report("2^k/k! < 1 [k=" + std::to_string(k) + "]",
                       Enclosure(Rat(0), crude), Enclosure::point(Rat(1)));
  }
  Enclosure z2 = zeta_enclosure(2, make_rat(1, 1000000));
  Enclosure p = pow_enclosure(z2, static_cast<unsigned long>(k));
  Rat inv_fact(1, fact);
  inv_fact.canonicalize();
  return make_report("zeta(2)^k/k! < 1 [k=" + std::to_string(k) + "]", p * inv_fact,
                     Enclosure::point(Rat(1)));
}

}  // namespace mrs
