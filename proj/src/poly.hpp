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

#ifndef MRSUMS_POLY_HPP
#define MRSUMS_POLY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rational.hpp"

namespace mrs {

// Integer-coefficient polynomial, coefficients ascending by degree with a
// nonzero leading coefficient (the zero polynomial is an empty vector).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> ascending_coeffs);

  // Grammar: optional-signed terms `c`, `c*x`, `cx`, `x^d`, `c*x^d`, `cx^d`
  // joined by '+'/'-'; whitespace ignored.
  static Polynomial parse(std::string_view text);

  Int eval(const Int& x) const;  // Horner

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coefficients() const { return coeffs_; }
  Int coefficient(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  size_t term_count() const;
  bool has_negative_coefficient() const;

  // Canonical display form: descending powers, `^` exponents, no `*`.
  std::string str() const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Int> coeffs_;
};

// Classification mirroring the case structure the certifier dispatches on.
struct MonomialXPower { unsigned degree = 1; };           // x^m
struct Monomial { Int coeff; unsigned degree = 0; };      // c*x^m, c != 1 or m == 0
struct XSquaredPlusOne {};
struct Linear { Int a, b; };                              // a*x + b, a != 0
struct DegreeAtLeastTwoMultiterm {};
struct HasNegativeCoefficient {};
struct VanishesOnPositiveInteger { Int witness; };

using PolyClass = std::variant<MonomialXPower, Monomial, XSquaredPlusOne, Linear,
                               DegreeAtLeastTwoMultiterm, HasNegativeCoefficient,
                               VanishesOnPositiveInteger>;

PolyClass classify(const Polynomial& f);

// Smallest positive integer root, if any. Candidates are the positive
// divisors of the lowest nonzero coefficient (after dividing out powers
// of x), optionally capped at `at_most`.
std::optional<Int> positive_integer_root(const Polynomial& f,
                                         const std::optional<Int>& at_most = std::nullopt);

// The threshold predicates for linear polynomials are parametrized as
// f(x) = a*x + (b - a); for f = A*x + B that means a = A, b = A + B.
// Only meaningful when both a and b end up >= 1.
struct ShiftedLinear { Int a, b; };
std::optional<ShiftedLinear> shifted_linear_form(const Polynomial& f);

}  // namespace mrs

#endif
