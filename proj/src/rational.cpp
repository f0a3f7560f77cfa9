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

#include "rational.hpp"

#include <cctype>
#include <cstdlib>

#include "errors.hpp"

namespace mrs {

Rat make_rat(long num, long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// mantissa ("12.5" or "12") -> rational, exact.
Rat parse_mantissa(const std::string& s) {
  auto dot = s.find('.');
  std::string ip = dot == std::string::npos ? s : s.substr(0, dot);
  std::string fp = dot == std::string::npos ? "" : s.substr(dot + 1);
  if (ip.empty() && fp.empty()) throw InvalidInput("empty number");
  if (!ip.empty() && !all_digits(ip)) throw InvalidInput("bad number: " + s);
  if (!fp.empty() && !all_digits(fp)) throw InvalidInput("bad number: " + s);
  Int num(ip.empty() ? "0" : ip, 10);  // explicit base: leading zeros are not octal
  Int den = 1;
  for (char c : fp) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InvalidInput("empty rational");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s = s.substr(1);
  }

  auto slash = s.find('/');
  Rat q;
  if (slash != std::string::npos) {
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (!all_digits(ns) || !all_digits(ds)) throw InvalidInput("bad rational: " + text);
    Int den(ds, 10);
    if (den == 0) throw InvalidInput("zero denominator: " + text);
    q = Rat(Int(ns, 10), den);
    q.canonicalize();
  } else {
    auto epos = s.find_first_of("eE");
    long exp10 = 0;
    std::string mant = s;
    if (epos != std::string::npos) {
      mant = s.substr(0, epos);
      std::string es = s.substr(epos + 1);
      if (es.empty()) throw InvalidInput("bad exponent: " + text);
      bool eneg = false;
      if (es[0] == '+' || es[0] == '-') {
        eneg = es[0] == '-';
        es = es.substr(1);
      }
      if (!all_digits(es) || es.size() > 6) throw InvalidInput("bad exponent: " + text);
      exp10 = std::atol(es.c_str());
      if (eneg) exp10 = -exp10;
    }
    q = parse_mantissa(mant);
    if (exp10 > 0)
      q *= Rat(ipow(10, static_cast<unsigned long>(exp10)));
    else if (exp10 < 0)
      q /= Rat(ipow(10, static_cast<unsigned long>(-exp10)));
  }
  if (neg) q = -q;
  return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::optional<Int> as_integer(const Rat& q) {
  if (!is_integer(q)) return std::nullopt;
  return q.get_num();
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

long valuation_int(Int x, const Int& p) {
  if (x == 0) throw InvalidInput("valuation of zero");
  if (p < 2) throw InvalidInput("valuation base must be >= 2");
  // mpz_remove strips every factor of p and reports how many it took out.
  Int reduced;
  mp_bitcnt_t r = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return static_cast<long>(r);
}

long valuation(const Rat& q, const Int& p) {
  if (q == 0) throw InvalidInput("valuation of zero is +infinity");
  if (!is_prime(p)) throw InvalidInput("valuation base " + p.get_str() + " is not prime");
  return valuation_int(q.get_num(), p) - valuation_int(q.get_den(), p);
}

std::string rat_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rat& q, int digits) {
  if (digits < 0) digits = 0;
  Int num = q.get_num();
  const Int& den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  Int ip = num / den;
  Int rem = num - ip * den;
  std::string out = (neg && (ip != 0 || rem != 0)) ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    Int scaled = rem * ipow(10, static_cast<unsigned long>(digits)) / den;
    std::string frac = scaled.get_str();
    out += "." + std::string(static_cast<size_t>(digits) - frac.size(), '0') + frac;
  }
  return out;
}

std::size_t denominator_digits(const Rat& q) {
  return mpz_sizeinbase(q.get_den_mpz_t(), 10);
}

}  // namespace mrs
