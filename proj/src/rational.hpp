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

#ifndef MRSUMS_RATIONAL_HPP
#define MRSUMS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace mrs {

// Exact arbitrary-precision arithmetic. GMP's canonical form matches the
// required invariants: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Accepts "num", "num/den", plain decimals ("0.001", "-12.5") and
// scientific notation ("1e-9", "2.5e3").
Rat parse_rat(const std::string& text);

bool is_integer(const Rat& q);
std::optional<Int> as_integer(const Rat& q);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

Int ipow(const Int& base, unsigned long exp);

bool is_prime(const Int& p);

// Largest r such that p^r divides x. Requires x != 0, p >= 2.
long valuation_int(Int x, const Int& p);

// v_p extended to rationals: v_p(num) - v_p(den).
// Throws InvalidInput on q == 0 (valuation would be +infinity) and on
// composite p.
long valuation(const Rat& q, const Int& p);

std::string rat_string(const Rat& q);  // "num/den", "num" when den == 1

// Decimal expansion truncated toward zero to `digits` fractional digits.
std::string decimal_string(const Rat& q, int digits);

std::size_t denominator_digits(const Rat& q);

}  // namespace mrs

#endif
