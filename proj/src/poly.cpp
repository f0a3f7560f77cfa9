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

#include "poly.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"

namespace mrs {

namespace {
constexpr unsigned kMaxDegree = 4096;
}

Polynomial::Polynomial(std::vector<Int> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InvalidInput("empty polynomial");

  std::vector<Int> coeffs;
  auto bump = [&coeffs](unsigned deg, const Int& c) {
    if (deg > kMaxDegree) throw InvalidInput("polynomial degree exceeds limit");
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Int(0));
    coeffs[deg] += c;
  };

  size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw InvalidInput("expected '+' or '-' in polynomial at: " + s.substr(i));
    }
    first = false;
    if (i >= s.size()) throw InvalidInput("dangling sign in polynomial");

    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    bool have_coeff = !digits.empty();
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff) throw InvalidInput("'*' without coefficient");
      ++i;
      if (i >= s.size() || s[i] != 'x') throw InvalidInput("'*' must be followed by x");
    }

    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      unsigned long deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ds;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ds += s[i++];
        if (ds.empty()) throw InvalidInput("missing exponent after '^'");
        if (ds.size() > 6) throw InvalidInput("exponent too large");
        deg = std::stoul(ds);
      }
      Int c = have_coeff ? Int(digits, 10) : Int(1);
      bump(static_cast<unsigned>(deg), sign * c);
    } else {
      if (!have_coeff) throw InvalidInput("malformed term in polynomial: " + s);
      bump(0, sign * Int(digits, 10));
    }
  }
  return Polynomial(std::move(coeffs));
}

Int Polynomial::eval(const Int& x) const {
  Int v = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
  return v;
}

size_t Polynomial::term_count() const {
  size_t n = 0;
  for (const Int& c : coeffs_)
    if (c != 0) ++n;
  return n;
}

bool Polynomial::has_negative_coefficient() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c < 0; });
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? "-" : "+";
    if (i == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str();
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

// Factor n (> 0) into primes; trial division plus Pollard rho for the
// stubborn cofactors. Inputs here are polynomial constant terms, so the
// sizes stay modest.
void factor_into(Int n, std::vector<Int>& out) {
  if (n <= 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(Int(p));
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  // Pollard rho (Brent variant)
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto step = [&n, c](const Int& v) { return Int((v * v + c) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Int diff = x > y ? Int(x - y) : Int(y - x);
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) {
      factor_into(d, out);
      factor_into(Int(n / d), out);
      return;
    }
    if (c > 64) throw Error(Status::Internal, "factorization failed");
  }
}

void collect_divisors(const std::vector<Int>& primes, size_t idx, const Int& acc,
                      std::vector<Int>& out) {
  if (out.size() > 200000) throw BudgetExceeded("too many divisors to enumerate");
  if (idx == primes.size()) {
    out.push_back(acc);
    return;
  }
  // primes is sorted, duplicates adjacent
  size_t j = idx;
  while (j < primes.size() && primes[j] == primes[idx]) ++j;
  Int v = acc;
  for (size_t e = 0; e <= j - idx; ++e) {
    collect_divisors(primes, j, v, out);
    if (e < j - idx) v *= primes[idx];
  }
}

}  // namespace

std::optional<Int> positive_integer_root(const Polynomial& f, const std::optional<Int>& at_most) {
  if (f.is_zero()) return Int(1);  // zero polynomial vanishes everywhere
  const auto& coeffs = f.coefficients();
  size_t low = 0;
  while (low < coeffs.size() && coeffs[low] == 0) ++low;  // strip x^t factor
  Int c0 = coeffs[low];
  if (c0 < 0) c0 = -c0;

  std::vector<Int> primes;
  factor_into(c0, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<Int> divisors;
  collect_divisors(primes, 0, Int(1), divisors);
  std::sort(divisors.begin(), divisors.end());

  for (const Int& w : divisors) {
    if (at_most && w > *at_most) break;
    if (f.eval(w) == 0) return w;
  }
  return std::nullopt;
}

PolyClass classify(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("cannot classify the zero polynomial");
  if (auto w = positive_integer_root(f)) return VanishesOnPositiveInteger{*w};

  const auto& coeffs = f.coefficients();
  int deg = f.degree();

  if (deg == 2 && coeffs[0] == 1 && coeffs[1] == 0 && coeffs[2] == 1) return XSquaredPlusOne{};

  if (f.term_count() == 1 && coeffs.back() > 0) {
    if (deg >= 1 && coeffs.back() == 1) return MonomialXPower{static_cast<unsigned>(deg)};
    return Monomial{coeffs.back(), static_cast<unsigned>(deg)};
  }

  if (deg == 1) return Linear{coeffs[1], coeffs[0]};
  if (f.has_negative_coefficient()) return HasNegativeCoefficient{};
  return DegreeAtLeastTwoMultiterm{};
}

std::optional<ShiftedLinear> shifted_linear_form(const Polynomial& f) {
  if (f.degree() != 1) return std::nullopt;
  Int a = f.coefficient(1);
  Int b = a + f.coefficient(0);
  if (a < 1 || b < 1) return std::nullopt;
  return ShiftedLinear{a, b};
}

}  // namespace mrs
