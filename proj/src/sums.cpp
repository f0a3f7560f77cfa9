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

#include "sums.hpp"

#include <cctype>

#include "errors.hpp"

namespace mrs {

ExponentTuple::ExponentTuple(std::vector<unsigned long> e) : exps(std::move(e)) {
  if (exps.empty()) throw InvalidInput("exponent tuple must have k >= 1");
  for (unsigned long s : exps)
    if (s < 1) throw InvalidInput("exponents must be positive");
}

ExponentTuple ExponentTuple::ones(size_t k) { return repeated(1, k); }

ExponentTuple ExponentTuple::repeated(unsigned long s, size_t k) {
  return ExponentTuple(std::vector<unsigned long>(k, s));
}

ExponentTuple ExponentTuple::parse(const std::string& text) {
  std::vector<unsigned long> exps;
  std::string item;
  auto flush = [&]() {
    if (item.empty()) throw InvalidInput("empty exponent entry");
    auto xpos = item.find('x');
    unsigned long value, count = 1;
    try {
      if (xpos == std::string::npos) {
        value = std::stoul(item);
      } else {
        value = std::stoul(item.substr(0, xpos));
        count = std::stoul(item.substr(xpos + 1));
      }
    } catch (const std::exception&) {
      throw InvalidInput("bad exponent entry: " + item);
    }
    if (count == 0 || count > 100000) throw InvalidInput("bad repeat count: " + item);
    for (unsigned long i = 0; i < count; ++i) exps.push_back(value);
    item.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      flush();
    } else {
      item += c;
    }
  }
  flush();
  return ExponentTuple(std::move(exps));
}

unsigned long ExponentTuple::total() const {
  unsigned long t = 0;
  for (unsigned long s : exps) t += s;
  return t;
}

bool ExponentTuple::all_ones() const {
  for (unsigned long s : exps)
    if (s != 1) return false;
  return true;
}

std::string ExponentTuple::str() const {
  std::string out;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exps[i]);
  }
  return out;
}

const char* mode_name(SumMode m) { return m == SumMode::Strict ? "strict" : "star"; }

SumSpec::SumSpec(Polynomial f_, ExponentTuple s_, uint64_t n_, SumMode mode_)
    : f(std::move(f_)), s(std::move(s_)), n(n_), mode(mode_) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  if (f.is_zero()) throw InvalidInput("polynomial must be nonzero");
  if (auto w = positive_integer_root(f, Int(static_cast<unsigned long>(n))))
    throw InvalidInput("f vanishes at m = " + w->get_str() + " within 1..n");
}

namespace {

Int pow_term(const Polynomial& f, uint64_t x, unsigned long s) {
  Int v = f.eval(Int(static_cast<unsigned long>(x)));
  if (v == 0) throw InvalidInput("f evaluates to zero inside the sum range");
  return ipow(v, s);
}

void check_digits(const Rat& q, const ExactOptions& opts) {
  if (denominator_digits(q) > opts.max_denominator_digits)
    throw BudgetExceeded("denominator exceeded " +
                         std::to_string(opts.max_denominator_digits) + " digits");
}

Rat exact_reduced(const SumSpec& spec, const ExactOptions& opts) {
  const size_t k = spec.k();
  std::vector<Rat> s(k + 1);
  s[0] = 1;
  auto update = [&](size_t j, uint64_t x, uint64_t report_index) {
    Rat term = s[j - 1] / Rat(pow_term(spec.f, x, spec.s.exps[j - 1]));
    s[j] += term;
    if (opts.trace && j >= 1 && is_integer(s[j]) && s[j] != 0)
      opts.trace->push_back(TraceHit{report_index, j});
  };
  if (spec.mode == SumMode::Strict) {
    if (k > spec.n) return Rat(0);
    for (uint64_t i = k; i <= spec.n; ++i) {
      for (size_t j = 1; j <= k; ++j) update(j, i - k + j, i - k + j);
      check_digits(s[k], opts);
    }
  } else {
    for (uint64_t m = 1; m <= spec.n; ++m) {
      for (size_t j = 1; j <= k; ++j) update(j, m, m);
      check_digits(s[k], opts);
    }
  }
  return s[k];
}

// Same sweep over scaled integer numerators with a fixed running
// denominator per level; a single reduction happens at the end. Level j
// holds N_j over D_j(cap) = prod_{v<=cap} f(v)^mu_j, where mu_j =
// max(s_1..s_k up to j) covers strict sweeps (indices distinct) and
// mu_j = s_1+...+s_j covers star sweeps (indices may repeat).
//
// Adding S[j-1]/f(x)^{s_j} to S[j] then needs the integer multiplier
// D_j(x) / (D_{j-1}(prev cap) * f(x)^{s_j}); gap[j] tracks the
// prod_{v<=cap} f(v)^(mu_j - mu_{j-1}) part of it.
Rat exact_unreduced(const SumSpec& spec, const ExactOptions& opts) {
  const size_t k = spec.k();
  const bool star = spec.mode == SumMode::Star;
  if (!star && k > spec.n) return Rat(0);

  std::vector<unsigned long> mu(k + 1, 0);
  for (size_t j = 1; j <= k; ++j)
    mu[j] = star ? mu[j - 1] + spec.s.exps[j - 1]
                 : std::max(mu[j - 1], spec.s.exps[j - 1]);

  auto f_at = [&spec](uint64_t v) {
    Int fv = spec.f.eval(Int(static_cast<unsigned long>(v)));
    if (fv == 0) throw InvalidInput("f evaluates to zero inside the sum range");
    return fv;
  };

  std::vector<Int> num(k + 1, Int(0));
  num[0] = 1;
  std::vector<Int> gap(k + 1, Int(1));
  const size_t digit_limit = opts.max_denominator_digits;

  if (!star) {
    // level j sees arguments x = j, j+1, ..., n-k+j; the lower level's cap
    // trails by one, so gap[j] must sit at cap x-1 when level j takes x
    for (size_t j = 1; j <= k; ++j)
      for (uint64_t v = 1; v + 1 <= j; ++v) gap[j] *= ipow(f_at(v), mu[j] - mu[j - 1]);
    for (uint64_t i = k; i <= spec.n; ++i) {
      for (size_t j = 1; j <= k; ++j) {
        uint64_t x = i - k + j;
        if (i > k && mu[j] > mu[j - 1]) gap[j] *= ipow(f_at(x - 1), mu[j] - mu[j - 1]);
        Int fx = f_at(x);
        num[j] *= ipow(fx, mu[j]);
        num[j] += num[j - 1] * gap[j] * ipow(fx, mu[j] - spec.s.exps[j - 1]);
      }
      if (mpz_sizeinbase(num[k].get_mpz_t(), 10) > digit_limit)
        throw BudgetExceeded("numerator exceeded digit budget");
    }
  } else {
    // all levels share the argument m and j-1 is already updated at m, so
    // the multiplier collapses to gap[j] at cap m-1
    for (uint64_t m = 1; m <= spec.n; ++m) {
      Int fm = f_at(m);
      for (size_t j = 1; j <= k; ++j) {
        num[j] *= ipow(fm, mu[j]);
        num[j] += num[j - 1] * gap[j];
      }
      for (size_t j = 1; j <= k; ++j) gap[j] *= ipow(fm, mu[j] - mu[j - 1]);
      if (mpz_sizeinbase(num[k].get_mpz_t(), 10) > digit_limit)
        throw BudgetExceeded("numerator exceeded digit budget");
    }
  }

  Int den = 1;
  for (uint64_t v = 1; v <= spec.n; ++v) den *= ipow(f_at(v), mu[k]);
  Rat out(num[k], den);
  out.canonicalize();
  return out;
}

}  // namespace

Rat compute_exact(const SumSpec& spec, const ExactOptions& opts) {
  if (opts.reduce || opts.trace) return exact_reduced(spec, opts);
  return exact_unreduced(spec, opts);
}

uint64_t bruteforce_tuple_count(const SumSpec& spec) {
  const uint64_t k = spec.k();
  Int count;
  if (spec.mode == SumMode::Strict) {
    if (k > spec.n) return 0;
    mpz_bin_uiui(count.get_mpz_t(), spec.n, static_cast<unsigned long>(k));
  } else {
    mpz_bin_uiui(count.get_mpz_t(), spec.n + k - 1, static_cast<unsigned long>(k));
  }
  if (!count.fits_ulong_p()) return UINT64_MAX;
  return count.get_ui();
}

Rat compute_bruteforce(const SumSpec& spec) {
  constexpr uint64_t kGuard = 1000000;
  uint64_t tuples = bruteforce_tuple_count(spec);
  if (tuples > kGuard)
    throw BudgetExceeded("bruteforce would enumerate " + std::to_string(tuples) + " tuples");
  const size_t k = spec.k();
  if (spec.mode == SumMode::Strict && k > spec.n) return Rat(0);

  std::vector<uint64_t> idx(k);
  const bool star = spec.mode == SumMode::Star;
  for (size_t j = 0; j < k; ++j) idx[j] = star ? 1 : j + 1;

  Rat total = 0;
  for (;;) {
    Int den = 1;
    for (size_t j = 0; j < k; ++j) den *= pow_term(spec.f, idx[j], spec.s.exps[j]);
    Rat term(1, den);
    term.canonicalize();
    total += term;

    // next tuple
    size_t j = k;
    while (j-- > 0) {
      uint64_t limit = (j + 1 == k) ? spec.n : (star ? idx[j + 1] : idx[j + 1] - 1);
      if (idx[j] < limit) {
        ++idx[j];
        for (size_t t = j + 1; t < k; ++t) idx[t] = star ? idx[t - 1] : idx[t - 1] + 1;
        break;
      }
      if (j == 0) return total;
    }
  }
}

Enclosure compute_enclosure(const SumSpec& spec, const Rat& width) {
  if (width <= 0) throw InvalidInput("enclosure width must be positive");
  const size_t k = spec.k();
  if (spec.mode == SumMode::Strict && k > spec.n) return Enclosure::point(Rat(0));

  // 2^-p units; start from the requested width plus room for n*k roundings
  Rat inv = 1 / width;
  unsigned base_bits = static_cast<unsigned>(mpz_sizeinbase(ceil_rat(inv).get_mpz_t(), 2)) + 1;
  uint64_t ops = spec.n * k + 1;
  unsigned op_bits = static_cast<unsigned>(mpz_sizeinbase(Int(static_cast<unsigned long>(ops)).get_mpz_t(), 2));
  unsigned prec = base_bits + op_bits + 8;

  for (int round = 0; round < 24; ++round) {
    std::vector<Enclosure> s(k + 1);
    s[0] = Enclosure::point(Rat(1));
    auto update = [&](size_t j, uint64_t x) {
      Rat t(1, pow_term(spec.f, x, spec.s.exps[j - 1]));
      t.canonicalize();
      s[j] = round_out(s[j] + s[j - 1] * t, prec);
    };
    if (spec.mode == SumMode::Strict) {
      for (uint64_t i = k; i <= spec.n; ++i)
        for (size_t j = 1; j <= k; ++j) update(j, i - k + j);
    } else {
      for (uint64_t m = 1; m <= spec.n; ++m)
        for (size_t j = 1; j <= k; ++j) update(j, m);
    }
    if (s[k].width() <= width) return s[k];
    prec *= 2;
    if (prec > (1u << 16)) break;
  }
  throw BudgetExceeded("enclosure precision escalation cap reached");
}

}  // namespace mrs
