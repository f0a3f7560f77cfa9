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

#ifndef MRSUMS_BOUNDS_HPP
#define MRSUMS_BOUNDS_HPP

#include <string>
#include <vector>

#include "enclosure.hpp"
#include "rational.hpp"

namespace mrs {

enum class Verdict { Holds, Fails, Undecided };

const char* verdict_name(Verdict v);

// A certified comparison lhs < rhs. Holds iff lhs.hi < rhs.lo, Fails iff
// lhs.lo > rhs.hi, Undecided otherwise.
struct BoundReport {
  std::string claim;
  Enclosure lhs, rhs;
  Verdict verdict = Verdict::Undecided;
};

BoundReport make_report(const std::string& claim, const Enclosure& lhs, const Enclosure& rhs);

// Upper bound for sum_{m <= i < j <= n} 1/(i^a j^b), any n:
//   (zeta(a)zeta(b) - zeta(a+b) - zeta(a)H_{m-1}(b) - zeta(b)H_{m-1}(a)
//    + H_{m-1}(a)H_{m-1}(b) + H_{m-1}(a+b)) / 2
// with H_s(t) the s-term partial sum of zeta(t), H_0 = 0.
Enclosure double_sum_zeta_bound(unsigned m, unsigned a, unsigned b, const Rat& width);

// Decides which hypothesis (if either) forces 0 < H < 1 for
// f(x) = a*x + (b-a) with positive a, b:
//   SmallN:  n <= (b/a) * (e^{a(sqrt(2b^2+1)-1)/b} - 1)
//   LargeK:  k >= (e/a) * log((an+b)/b) + e/b
enum class ThresholdKind { SmallN, LargeK, Neither };
const char* threshold_name(ThresholdKind t);
ThresholdKind below_one_threshold(const Int& a, const Int& b, uint64_t n, uint64_t k);

// Exact integer comparisons backing the valuation splits.
BoundReport h1prime_power_check(uint64_t q, unsigned long s1);  // 245157(q+46)^22 < q^(s1-1)
BoundReport h3prime_power_check(uint64_t l, unsigned long s1);  // 10(l+10)^4 < l^(s1-1)

// The fixed inequality suite the star-sum case analysis relies on; every
// report must come back Holds.
std::vector<BoundReport> case_inequality_suite();

// Certifies an upper bound below one for the sum over increasing k-tuples
// of prod 1/i_j^2 (any n): k = 2 uses the pair bound above, k >= 3 uses
// zeta(2)^k / k! (crude 2^k/k! once that is already tiny).
BoundReport strict_square_below_one(uint64_t k);

// H_s(t) = sum_{i=1}^{s} 1/i^t, exact.
Rat harmonic_power_partial(unsigned long s, unsigned long t);

}  // namespace mrs

#endif
