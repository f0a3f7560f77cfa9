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

#ifndef MRSUMS_ENCLOSURE_HPP
#define MRSUMS_ENCLOSURE_HPP

#include <functional>
#include <string>

#include "rational.hpp"

namespace mrs {

// A pair of rationals provably bracketing a real value. Endpoint arithmetic
// is exact, so +,-,* are themselves exact (no rounding step); only series
// evaluations and the dyadic rounding helpers widen intervals, and they
// widen outward.
struct Enclosure {
  Rat lo, hi;

  Enclosure() : lo(0), hi(0) {}
  Enclosure(Rat l, Rat h);
  static Enclosure point(const Rat& v) { return Enclosure(v, v); }

  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Rat& c);
Enclosure operator+(const Enclosure& a, const Rat& c);
Enclosure operator-(const Enclosure& a, const Rat& c);

// Reciprocal / division require a sign-definite divisor.
Enclosure reciprocal(const Enclosure& a);
Enclosure operator/(const Enclosure& a, const Enclosure& b);
Enclosure square(const Enclosure& a);
Enclosure pow_enclosure(const Enclosure& a, unsigned long e);  // a.lo >= 0

// Dyadic rounding: lo down, hi up to multiples of 2^-prec_bits.
Rat dyadic_floor(const Rat& v, unsigned prec_bits);
Rat dyadic_ceil(const Rat& v, unsigned prec_bits);
Enclosure round_out(const Enclosure& a, unsigned prec_bits);

// --- enclosed constants and elementary functions -------------------------
//
// Every function returns [lo, hi] with lo < value < hi (or the exact point
// where one exists, e.g. log 1 = 0) and hi - lo <= width.

// zeta(s) for s >= 2 via partial sum plus integral-comparison tail:
// sum_{i>N} i^-s lies in [(N+1)^(1-s)/(s-1), N^(1-s)/(s-1)].
Enclosure zeta_enclosure(unsigned long s, const Rat& width);

// Euler's number via sum 1/i! with tail bound 2/(N+1)!.
Enclosure e_enclosure(const Rat& width);

// Natural log via power-of-two argument reduction and the atanh series
// with a geometric tail bound. log_enclosure(1, w) = [0, 0].
Enclosure log_enclosure(const Rat& x, const Rat& width);

Enclosure exp_enclosure(const Rat& x, const Rat& width);
Enclosure exp_enclosure(const Enclosure& x, const Rat& width);

Enclosure sqrt_enclosure(const Rat& x, const Rat& width);

// sum_{j=1}^infty 1/f(j) for integer-coefficient f given by ascending
// coefficients with nonnegative entries, deg >= 2, leading > 0. Tail via
// a_m j^m <= f(j) <= (a_m + C/N) j^m for j > N.
Enclosure reciprocal_poly_series(const std::vector<Int>& ascending_coeffs,
                                 const Rat& width);

// --- comparison driver ----------------------------------------------------

struct CompareOptions {
  Rat start_width = make_rat(1, 1000);
  unsigned max_rounds = 60;  // widths tighten by 10x per round
};

// Decides lhs < rhs where each side is re-evaluated at tightening widths.
// Throws Undecidable when the gap never resolves.
bool decide_less(const std::function<Enclosure(const Rat&)>& lhs,
                 const std::function<Enclosure(const Rat&)>& rhs,
                 const std::string& what,
                 const CompareOptions& opts = {});

}  // namespace mrs

#endif
