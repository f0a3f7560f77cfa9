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

#include "enclosure.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "errors.hpp"

namespace mrs {

Enclosure::Enclosure(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw Error(Status::Internal, "inverted enclosure");
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  return Enclosure(a.lo + b.lo, a.hi + b.hi);
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  return Enclosure(a.lo - b.hi, a.hi - b.lo);
}

Enclosure operator-(const Enclosure& a) { return Enclosure(-a.hi, -a.lo); }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return Enclosure(std::min(std::min(p1, p2), std::min(p3, p4)),
                   std::max(std::max(p1, p2), std::max(p3, p4)));
}

Enclosure operator*(const Enclosure& a, const Rat& c) {
  if (c >= 0) return Enclosure(a.lo * c, a.hi * c);
  return Enclosure(a.hi * c, a.lo * c);
}

Enclosure operator+(const Enclosure& a, const Rat& c) {
  return Enclosure(a.lo + c, a.hi + c);
}

Enclosure operator-(const Enclosure& a, const Rat& c) {
  return Enclosure(a.lo - c, a.hi - c);
}

Enclosure reciprocal(const Enclosure& a) {
  if (a.lo <= 0 && a.hi >= 0)
    throw Error(Status::Internal, "reciprocal of enclosure containing zero");
  return Enclosure(1 / a.hi, 1 / a.lo);
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  return a * reciprocal(b);
}

Enclosure square(const Enclosure& a) {
  if (a.lo >= 0) return Enclosure(a.lo * a.lo, a.hi * a.hi);
  if (a.hi <= 0) return Enclosure(a.hi * a.hi, a.lo * a.lo);
  return Enclosure(Rat(0), std::max(a.lo * a.lo, a.hi * a.hi));
}

Enclosure pow_enclosure(const Enclosure& a, unsigned long e) {
  if (a.lo < 0) throw Error(Status::Internal, "pow_enclosure needs a nonnegative base");
  Rat l = 1, h = 1;
  for (unsigned long i = 0; i < e; ++i) {
    l *= a.lo;
    h *= a.hi;
  }
  return Enclosure(l, h);
}

Rat dyadic_floor(const Rat& v, unsigned prec_bits) {
  Int scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), v.get_num_mpz_t(), prec_bits);
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.get_den_mpz_t());
  Rat r(q, Int(1) << prec_bits);
  r.canonicalize();
  return r;
}

Rat dyadic_ceil(const Rat& v, unsigned prec_bits) {
  Int scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), v.get_num_mpz_t(), prec_bits);
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.get_den_mpz_t());
  Rat r(q, Int(1) << prec_bits);
  r.canonicalize();
  return r;
}

Enclosure round_out(const Enclosure& a, unsigned prec_bits) {
  return Enclosure(dyadic_floor(a.lo, prec_bits), dyadic_ceil(a.hi, prec_bits));
}

namespace {

unsigned bits_for_width(const Rat& width) {
  // smallest p with 2^-p <= width
  if (width >= 1) return 1;
  Rat inv = 1 / width;
  return static_cast<unsigned>(mpz_sizeinbase(Rat(ceil_rat(inv)).get_num_mpz_t(), 2)) + 1;
}

void check_width(const Rat& width) {
  if (width <= 0) throw InvalidInput("enclosure width must be positive");
}

// Accumulates sum_{i=a}^{b} 1/den(i) in 2^-prec units, rounding each term
// down for the returned lo and up for hi.
struct DyadicAccumulator {
  Int lo = 0, hi = 0;
  Int one;  // 2^prec
  unsigned prec;

  explicit DyadicAccumulator(unsigned prec_bits) : prec(prec_bits) {
    mpz_ui_pow_ui(one.get_mpz_t(), 2, prec_bits);
  }

  void add_reciprocal(const Int& den) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), one.get_mpz_t(), den.get_mpz_t());
    lo += q;
    hi += q;
    if (r != 0) hi += 1;
  }

  Rat low() const {
    Rat v(lo, one);
    v.canonicalize();
    return v;
  }
  Rat high() const {
    Rat v(hi, one);
    v.canonicalize();
    return v;
  }
};

// sum_{i>N} i^-s bracket by integral comparison.
Enclosure zeta_tail(unsigned long s, unsigned long n) {
  Rat lo(1, 1), hi(1, 1);
  lo /= Rat(ipow(Int(n + 1), s - 1) * (s - 1));
  hi /= Rat(ipow(Int(n), s - 1) * (s - 1));
  return Enclosure(lo, hi);
}

Enclosure zeta_uncached(unsigned long s, const Rat& width) {
  if (s < 2) throw InvalidInput("zeta enclosure needs s >= 2");
  check_width(width);
  unsigned long n = 2;
  while (zeta_tail(s, n).width() > width / 2) {
    if (n > (1ul << 31)) throw BudgetExceeded("zeta term count exceeds budget");
    n *= 2;
  }
  for (;;) {
    unsigned prec = bits_for_width(width) + static_cast<unsigned>(mpz_sizeinbase(Int(n).get_mpz_t(), 2)) + 6;
    DyadicAccumulator acc(prec);
    Int den;
    for (unsigned long i = 1; i <= n; ++i) {
      mpz_ui_pow_ui(den.get_mpz_t(), i, s);
      acc.add_reciprocal(den);
    }
    Enclosure tail = zeta_tail(s, n);
    Enclosure out(acc.low() + tail.lo, acc.high() + tail.hi);
    if (out.width() <= width) return out;
    n *= 2;  // paranoia; the a-priori choice above normally suffices
  }
}

struct RatKeyLess {
  bool operator()(const std::pair<unsigned long, Rat>& a,
                  const std::pair<unsigned long, Rat>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

}  // namespace

Enclosure zeta_enclosure(unsigned long s, const Rat& width) {
  static std::mutex mu;
  static std::map<std::pair<unsigned long, Rat>, Enclosure, RatKeyLess> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({s, width});
    if (it != cache.end()) return it->second;
  }
  Enclosure e = zeta_uncached(s, width);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(s, width), e);
  return e;
}

Enclosure e_enclosure(const Rat& width) {
  check_width(width);
  Rat partial = 1;  // i = 0 term
  Rat term = 1;
  unsigned long i = 0;
  Rat tail;
  do {
    ++i;
    term /= static_cast<unsigned long>(i);
    partial += term;
    tail = 2 * term / (i + 1);  // 2/(i+1)!
  } while (tail > width);
  return Enclosure(partial, partial + tail);
}

namespace {

// atanh(z) for exact rational 0 <= z < 1/2, tail by geometric bound.
Enclosure atanh_series(const Rat& z, const Rat& width) {
  if (z == 0) return Enclosure::point(Rat(0));
  Rat z2 = z * z;
  Rat power = z;  // z^(2t+1)
  Rat partial = 0;
  unsigned long t = 0;
  for (;;) {
    partial += power / (2 * t + 1);
    power *= z2;
    ++t;
    Rat bound = power / ((2 * t + 1) * (1 - z2));
    if (bound <= width) return Enclosure(partial, partial + bound);
    if (t > 100000) throw BudgetExceeded("atanh series too long");
  }
}

Enclosure log2_enclosure(const Rat& width) {
  static std::mutex mu;
  static std::map<Rat, Enclosure> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(width);
    if (it != cache.end()) return it->second;
  }
  Enclosure e = atanh_series(make_rat(1, 3), width / 2) * make_rat(2);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(width, e);
  return e;
}

}  // namespace

Enclosure log_enclosure(const Rat& x, const Rat& width) {
  if (x <= 0) throw InvalidInput("log of nonpositive value");
  check_width(width);
  if (x == 1) return Enclosure::point(Rat(0));

  // x = 2^e * m with m in [1, 2)
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  auto scaled = [&x](long k) {
    Rat m = x;
    if (k >= 0)
      m /= Rat(Int(1) << k);
    else
      m *= Rat(Int(1) << (-k));
    return m;
  };
  Rat m = scaled(e);
  if (m < 1) {
    --e;
    m = scaled(e);
  } else if (m >= 2) {
    ++e;
    m = scaled(e);
  }

  Rat z = (m - 1) / (m + 1);  // in [0, 1/3)
  Enclosure log_m = atanh_series(z, width / 4) * make_rat(2);
  if (e == 0) return log_m;
  unsigned long abs_e = static_cast<unsigned long>(e < 0 ? -e : e);
  Enclosure l2 = log2_enclosure(width / (2 * (abs_e + 1)));
  return log_m + l2 * make_rat(e);
}

Enclosure exp_enclosure(const Rat& x, const Rat& width) {
  check_width(width);
  if (x == 0) return Enclosure::point(Rat(1));
  if (x < 0) {
    // 1/exp(-x); tighten until the reciprocal meets the width
    Rat w = width;
    for (int round = 0; round < 64; ++round) {
      Enclosure inner = exp_enclosure(-x, w);
      Enclosure out = reciprocal(inner);
      if (out.width() <= width) return out;
      w /= 10;
    }
    throw Undecidable("exp enclosure failed to converge");
  }
  if (x > 64) throw InvalidInput("exp argument too large for series evaluation");
  Rat partial = 1;
  Rat term = 1;
  unsigned long i = 0;
  for (;;) {
    ++i;
    term *= x;
    term /= static_cast<unsigned long>(i);
    partial += term;
    if (Rat(i + 2) > x) {
      // remainder < term * x/(i+1) / (1 - x/(i+2))
      Rat bound = term * x / (i + 1) / (1 - x / (i + 2));
      if (bound <= width) return Enclosure(partial, partial + bound);
    }
    if (i > 100000) throw BudgetExceeded("exp series too long");
  }
}

Enclosure exp_enclosure(const Enclosure& x, const Rat& width) {
  Enclosure lo = exp_enclosure(x.lo, width / 2);
  Enclosure hi = exp_enclosure(x.hi, width / 2);
  return Enclosure(lo.lo, hi.hi);
}

Enclosure sqrt_enclosure(const Rat& x, const Rat& width) {
  if (x < 0) throw InvalidInput("sqrt of negative value");
  check_width(width);
  if (x == 0) return Enclosure::point(Rat(0));
  unsigned prec = bits_for_width(width) + 2;
  // sqrt(p/q) = sqrt(p*q)/q; isqrt at 2^prec scale
  Int pq = x.get_num() * x.get_den();
  Int scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), pq.get_mpz_t(), 2 * prec);
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Int denom;
  mpz_mul_2exp(denom.get_mpz_t(), x.get_den().get_mpz_t(), prec);
  Rat lo(root, denom), hi(root + 1, denom);
  lo.canonicalize();
  hi.canonicalize();
  return Enclosure(lo, hi);
}

Enclosure reciprocal_poly_series(const std::vector<Int>& coeffs, const Rat& width) {
  check_width(width);
  if (coeffs.size() < 3 || coeffs.back() <= 0)
    throw InvalidInput("series needs degree >= 2 with positive leading coefficient");
  for (const Int& c : coeffs)
    if (c < 0) throw InvalidInput("series needs nonnegative coefficients");
  unsigned long m = coeffs.size() - 1;
  const Int& lead = coeffs.back();
  Int lower_sum = 0;
  for (size_t i = 0; i + 1 < coeffs.size(); ++i) lower_sum += coeffs[i];

  auto tail = [&](unsigned long n) {
    Enclosure zt = zeta_tail(m, n);
    Rat lo = zt.lo / (Rat(lead) + Rat(lower_sum) / static_cast<unsigned long>(n));
    Rat hi = zt.hi / Rat(lead);
    return Enclosure(lo, hi);
  };

  unsigned long n = 16;
  while (tail(n).width() > width / 2) {
    if (n > (1ul << 31)) throw BudgetExceeded("series term count exceeds budget");
    n *= 2;
  }
  unsigned prec = bits_for_width(width) + static_cast<unsigned>(mpz_sizeinbase(Int(n).get_mpz_t(), 2)) + 6;
  DyadicAccumulator acc(prec);
  for (unsigned long j = 1; j <= n; ++j) {
    Int v = 0;
    Int xj(j);
    for (size_t i = coeffs.size(); i-- > 0;) v = v * xj + coeffs[i];  // Horner
    acc.add_reciprocal(v);
  }
  Enclosure t = tail(n);
  return Enclosure(acc.low() + t.lo, acc.high() + t.hi);
}

bool decide_less(const std::function<Enclosure(const Rat&)>& lhs,
                 const std::function<Enclosure(const Rat&)>& rhs,
                 const std::string& what, const CompareOptions& opts) {
  Rat w = opts.start_width;
  for (unsigned round = 0; round < opts.max_rounds; ++round) {
    Enclosure l = lhs(w);
    Enclosure r = rhs(w);
    if (l.hi < r.lo) return true;
    if (r.hi < l.lo) return false;
    w /= 10;
  }
  throw Undecidable("comparison undecided at maximum precision: " + what);
}

}  // namespace mrs
