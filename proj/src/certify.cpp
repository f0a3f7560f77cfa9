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

#include "certify.hpp"

#include <map>
#include <mutex>

#include "errors.hpp"

namespace mrs {

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::ValuationNegative: return "valuation-negative";
    case CertKind::BoundBelowOne: return "bound-below-one";
    case CertKind::StrictlyBetween: return "strictly-between";
    default: return "integer-exception";
  }
}

namespace {

const Polynomial& poly_2xm1() {
  static const Polynomial f = Polynomial::parse("2x-1");
  return f;
}

bool within_budget(const CertifyContext& ctx, uint64_t n, uint64_t k) {
  return n * k <= ctx.exact_nk_budget;
}

std::optional<Rat> try_exact(const CertifyContext& ctx, const SumSpec& spec) {
  if (!within_budget(ctx, spec.n, spec.k())) return std::nullopt;
  try {
    return compute_exact(spec, ctx.exact);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

// Verifies a claimed valuation against the exact value when affordable.
// exact_formula says the claimed v is the true valuation (not just a bound).
void cross_check_valuation(const CertifyContext& ctx, Certificate& cert, bool exact_formula) {
  cert.valuation_exact = exact_formula;
  if (!ctx.cross_check) return;
  auto value = try_exact(ctx, cert.spec);
  if (!value) return;
  long v = valuation(*value, Int(static_cast<unsigned long>(cert.prime)));
  bool ok = exact_formula ? v == cert.valuation : v <= cert.valuation;
  if (!ok)
    throw Falsified("valuation cross-check failed: claimed " + std::to_string(cert.valuation) +
                    ", exact " + std::to_string(v) + " at p = " + std::to_string(cert.prime));
  cert.valuation = v;
  cert.valuation_exact = true;
  cert.cross_checked = true;
  cert.exact_value = *value;
}

Certificate exact_value_certificate(const CertifyContext& ctx, const SumSpec& spec,
                                    const std::string& method) {
  if (!within_budget(ctx, spec.n, spec.k()))
    throw Unsupported("exact fallback budget exceeded (n*k = " +
                      std::to_string(spec.n * spec.k()) + ")");
  Rat value = compute_exact(spec, ctx.exact);
  if (auto whole = as_integer(value)) {
    Certificate cert(CertKind::IntegerException, method, spec);
    cert.exact_value = value;
    cert.integer_value = *whole;
    return cert;
  }
  if (value > 0 && value < 1) {
    Certificate cert(CertKind::BoundBelowOne, method, spec);
    cert.exact_value = value;
    cert.cross_checked = true;
    cert.bound = make_report("0 < value < 1 (exact)", Enclosure::point(value),
                             Enclosure::point(Rat(1)));
    return cert;
  }
  Certificate cert(CertKind::StrictlyBetween, method, spec);
  cert.exact_value = value;
  cert.cross_checked = true;
  cert.lower_int = floor_rat(value);
  cert.upper_int = cert.lower_int + 1;
  return cert;
}

Certificate bound_certificate(const SumSpec& spec, const std::string& method,
                              BoundReport report) {
  if (report.verdict != Verdict::Holds)
    throw Undecidable("bound strategy could not certify: " + report.claim);
  Certificate cert(CertKind::BoundBelowOne, method, spec);
  cert.bound = std::move(report);
  return cert;
}

// --- cached one-time facts -------------------------------------------------

// Decides a claim of the form "enclosure(width) < 1" once and caches it.
class CachedBelowOne {
 public:
  CachedBelowOne(std::string claim, std::function<Enclosure(const Rat&)> fn)
      : claim_(std::move(claim)), fn_(std::move(fn)) {}

  BoundReport get() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!report_) {
      Rat w = make_rat(1, 1000);
      for (unsigned round = 0; round < 60 && !report_; ++round) {
        BoundReport r = make_report(claim_, fn_(w), Enclosure::point(Rat(1)));
        if (r.verdict != Verdict::Undecided) report_ = r;
        w /= 10;
      }
      if (!report_) throw Undecidable("cached bound stayed undecided: " + claim_);
    }
    return *report_;
  }

 private:
  std::string claim_;
  std::function<Enclosure(const Rat&)> fn_;
  std::mutex mu_;
  std::optional<BoundReport> report_;
};

BoundReport squared_plus_one_k1_s2_bound() {
  static CachedBelowOne cached("sum 1/(i^2+1)^2 < zeta(4) - 3/4 < 1", [](const Rat& w) {
    return zeta_enclosure(4, w) - make_rat(3, 4);
  });
  return cached.get();
}

BoundReport squared_plus_one_k2_bound() {
  static CachedBelowOne cached(
      "H*_2 bound zeta(4)/2 + zeta(2)^2/2 - (11/20)zeta(2) - 21/100 < 1", [](const Rat& w) {
        Enclosure z2 = zeta_enclosure(2, w);
        Enclosure z4 = zeta_enclosure(4, w);
        return z4 * make_rat(1, 2) + square(z2) * make_rat(1, 2) - z2 * make_rat(11, 20) -
               make_rat(21, 100);
      });
  return cached.get();
}

BoundReport squared_plus_two_series_bound() {
  static CachedBelowOne cached("sum 1/(j^2+2) < 1", [](const Rat& w) {
    return reciprocal_poly_series({Int(2), Int(0), Int(1)}, w);
  });
  return cached.get();
}

Enclosure zeta2_below_two() {
  static std::once_flag flag;
  static Enclosure cached;
  std::call_once(flag, [] {
    cached = zeta_enclosure(2, make_rat(1, 1000000));
    if (!(cached.hi < 2)) throw Falsified("zeta(2) enclosure not below 2");
  });
  return cached;
}

// H_{k,2x-1}(ones, n_k) < 1 for 9 <= k <= 18, and the s' = (1,2,1,...)
// variant for 2 <= k <= 8; both certified by enclosure once per k.
BoundReport row_below_one(const CertifyContext& ctx, uint64_t k, bool prime_tail) {
  static std::mutex mu;
  static std::map<std::pair<uint64_t, bool>, BoundReport> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k, prime_tail});
    if (it != cache.end()) return it->second;
  }
  auto [pk, nk] = threshold_prime_pair(*ctx.table, static_cast<unsigned>(k));
  (void)pk;
  ExponentTuple s = ExponentTuple::ones(static_cast<size_t>(k));
  std::string claim;
  if (prime_tail) {
    s.exps[1] = 2;  // (1, 2, 1, ..., 1)
    claim = "H_k((1,2,1...), n_k) < 1 [k=" + std::to_string(k) + "]";
  } else {
    claim = "H_k(ones, n_k) < 1 [k=" + std::to_string(k) + "]";
  }
  SumSpec spec(poly_2xm1(), s, nk, SumMode::Strict);
  Rat w = make_rat(1, 1000);
  BoundReport report;
  for (unsigned round = 0; round < 12; ++round) {
    report = make_report(claim, compute_enclosure(spec, w), Enclosure::point(Rat(1)));
    if (report.verdict != Verdict::Undecided) break;
    w /= 10;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(k, prime_tail), report);
  return report;
}

BoundReport h47_below_one(const CertifyContext& ctx, uint64_t k) {
  static std::mutex mu;
  static std::map<uint64_t, BoundReport> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  SumSpec spec(poly_2xm1(), ExponentTuple::ones(static_cast<size_t>(k)), 47, SumMode::Strict);
  Rat value = compute_exact(spec, ctx.exact);
  BoundReport report = make_report("H_k(ones, 47) < 1 [k=" + std::to_string(k) + "]",
                                   Enclosure::point(value), Enclosure::point(Rat(1)));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(k, report);
  return report;
}

}  // namespace

// --- valuation strategies --------------------------------------------------

Certificate window_valuation_certificate(const CertifyContext& ctx, const ExponentTuple& s,
                                         uint64_t n, uint64_t k) {
  if (k != s.k()) throw InvalidInput("k must match the exponent tuple");
  auto p = find_window_prime(*ctx.table, n, k);
  if (!p)
    throw NoQualifyingPrime("no prime in (n/(k+1/2), n/k] with p > 2k for n = " +
                            std::to_string(n) + ", k = " + std::to_string(k));
  SumSpec spec(poly_2xm1(), s, n, SumMode::Strict);
  Certificate cert(CertKind::ValuationNegative, "window-valuation", spec);
  cert.prime = *p;
  cert.valuation = -static_cast<long>(s.total());
  cross_check_valuation(ctx, cert, /*exact_formula=*/true);
  return cert;
}

Certificate star_bertrand_certificate(const CertifyContext& ctx, const ExponentTuple& s,
                                      uint64_t n) {
  if (n < 2) throw InvalidInput("Bertrand valuation needs n >= 2");
  uint64_t p = bertrand_prime(*ctx.table, 2 * n - 1);
  if (!(p > (2 * n - 1) / 2 && p % 2 == 1))
    throw Falsified("Bertrand window violation at 2n-1 = " + std::to_string(2 * n - 1));
  SumSpec spec(poly_2xm1(), s, n, SumMode::Star);
  Certificate cert(CertKind::ValuationNegative, "star-bertrand-valuation", spec);
  cert.prime = p;
  cert.valuation = -static_cast<long>(s.total());
  cross_check_valuation(ctx, cert, /*exact_formula=*/true);
  return cert;
}

Certificate monomial_certificate(const CertifyContext& ctx, const SumSpec& spec) {
  PolyClass cls = classify(spec.f);
  Int lead;
  unsigned long m;
  if (auto* xm = std::get_if<MonomialXPower>(&cls)) {
    lead = 1;
    m = xm->degree;
  } else if (auto* mono = std::get_if<Monomial>(&cls)) {
    lead = mono->coeff;
    m = mono->degree;
    if (m < 1) throw Unsupported("constant polynomials are not certified");
  } else {
    throw InvalidInput("monomial strategy applied to a non-monomial");
  }
  if (spec.mode == SumMode::Strict && spec.k() > 1)
    throw PreconditionFailed("monomial valuation covers star sums (or k = 1)");
  if (spec.n < 2) throw PreconditionFailed("monomial valuation needs n >= 2");

  uint64_t p = bertrand_prime(*ctx.table, spec.n);
  Certificate cert(CertKind::ValuationNegative, "monomial-bertrand-valuation", spec);
  cert.prime = p;
  long vp_lead = valuation_int(lead, Int(static_cast<unsigned long>(p)));
  cert.valuation = -static_cast<long>(spec.s.total()) * (static_cast<long>(m) + vp_lead);
  cross_check_valuation(ctx, cert, /*exact_formula=*/true);
  if (cert.valuation >= 0) throw Falsified("monomial valuation came out nonnegative");
  return cert;
}

Certificate qn_split_certificate(const CertifyContext& ctx, const ExponentTuple& s, uint64_t n,
                                 uint64_t k) {
  if (k != s.k() || k < 2 || k > 8) throw PreconditionFailed("q_n split needs 2 <= k <= 8");
  if (n < 48 || n > 1191) throw PreconditionFailed("q_n split needs 48 <= n <= 1191");
  if (s.exps[0] < 30) throw PreconditionFailed("q_n split needs s_1 >= 30");
  for (size_t j = 1; j < s.k(); ++j)
    if (s.exps[j] != 1) throw PreconditionFailed("q_n split needs a unit tail");

  uint64_t q = qn_prime(*ctx.table, n);
  BoundReport power = h1prime_power_check(q, s.exps[0]);
  if (power.verdict != Verdict::Holds)
    throw Falsified("numerator power check failed at q = " + std::to_string(q));

  SumSpec spec(poly_2xm1(), s, n, SumMode::Strict);
  Certificate cert(CertKind::ValuationNegative, "qn-split-valuation", spec);
  cert.prime = q;
  cert.valuation = -2;  // proven bound; exact value filled in by cross-check
  cert.bound = power;
  cross_check_valuation(ctx, cert, /*exact_formula=*/false);
  return cert;
}

Certificate ln_split_certificate(const CertifyContext& ctx, const ExponentTuple& s, uint64_t n,
                                 uint64_t k) {
  if (k != s.k() || k < 2 || k > 4) throw PreconditionFailed("l_n split needs 2 <= k <= 4");
  if (n < 12 || n > 47) throw PreconditionFailed("l_n split needs 12 <= n <= 47");
  if (s.exps[0] < 7) throw PreconditionFailed("l_n split needs s_1 >= 7");
  for (size_t j = 1; j < s.k(); ++j)
    if (s.exps[j] != 1) throw PreconditionFailed("l_n split needs a unit tail");

  uint64_t l = ln_prime(*ctx.table, n);
  BoundReport power = h3prime_power_check(l, s.exps[0]);
  if (power.verdict != Verdict::Holds)
    throw Falsified("numerator power check failed at l = " + std::to_string(l));

  SumSpec spec(poly_2xm1(), s, n, SumMode::Strict);
  Certificate cert(CertKind::ValuationNegative, "ln-split-valuation", spec);
  cert.prime = l;
  cert.valuation = -2;
  cert.bound = power;
  cross_check_valuation(ctx, cert, /*exact_formula=*/false);
  if (!cert.cross_checked)
    throw Error(Status::Internal, "l_n split expected an exact cross-check");
  return cert;
}

Certificate small_n_certificate(const CertifyContext& ctx, const ExponentTuple& s, uint64_t n) {
  if (s.k() != 2) throw PreconditionFailed("small-n route is k = 2 only");
  if (n > 11) throw PreconditionFailed("small-n route needs n <= 11");
  unsigned long s1 = s.exps[0];
  if (s1 < 2 || s.exps[1] != 1)
    throw PreconditionFailed("small-n route needs s_1 >= 2 and s_2 = 1");

  SumSpec spec(poly_2xm1(), s, n, SumMode::Strict);
  Certificate cert(CertKind::ValuationNegative, "small-n-valuation", spec);
  if (n == 6 || n == 9) {
    if (s1 < 3) throw PreconditionFailed("3-adic route needs s_1 >= 3");
    cert.prime = 3;
    cert.valuation = n == 6 ? -2 * static_cast<long>(s1) : -2 * static_cast<long>(s1) - 1;
  } else if (n >= 3) {
    uint64_t q = 2 * n - 3;
    if (!ctx.table->is_prime(q))
      throw Falsified("expected 2n-3 prime at n = " + std::to_string(n));
    cert.prime = q;
    cert.valuation = -static_cast<long>(s1);
  } else {
    throw PreconditionFailed("small-n route starts at n = 3");
  }
  cross_check_valuation(ctx, cert, /*exact_formula=*/true);
  if (!cert.cross_checked)
    throw Error(Status::Internal, "small-n route expected an exact cross-check");
  return cert;
}

// --- star-mode routes ------------------------------------------------------

namespace {

Certificate star_squared_plus_one(const CertifyContext& ctx, const SumSpec& spec) {
  const uint64_t n = spec.n;
  const size_t k = spec.k();
  if (k == 1 && spec.s.exps[0] == 1) {
    if (n <= 12) {
      Certificate cert = exact_value_certificate(ctx, spec, "star-sqp1-head");
      if (cert.kind != CertKind::BoundBelowOne)
        throw Falsified("head sum left (0,1) unexpectedly");
      return cert;
    }
    // 1 < H*(13) <= H*(n) < zeta(2) < 2
    Certificate cert(CertKind::StrictlyBetween, "star-sqp1-between", spec);
    cert.lower_int = 1;
    cert.upper_int = 2;
    if (auto value = try_exact(ctx, spec)) {
      if (!(*value > 1 && *value < 2)) throw Falsified("value left (1,2) unexpectedly");
      cert.exact_value = *value;
      cert.cross_checked = true;
    } else {
      Rat head = 0;
      for (unsigned long i = 1; i <= 13; ++i) {
        Rat term(1, Int(i) * i + 1);
        term.canonicalize();
        head += term;
      }
      if (!(head > 1)) throw Falsified("13-term head not above 1");
      cert.value_enclosure = Enclosure(head, zeta2_below_two().hi);
    }
    return cert;
  }
  if (k == 1) {
    return bound_certificate(spec, "star-sqp1-s2", squared_plus_one_k1_s2_bound());
  }
  if (n == 2) return exact_value_certificate(ctx, spec, "star-sqp1-head");
  return bound_certificate(spec, "star-sqp1-k2-bound", squared_plus_one_k2_bound());
}

Certificate star_multiterm(const CertifyContext& ctx, const SumSpec& spec) {
  (void)ctx;
  const auto& f = spec.f;
  int deg = f.degree();
  // H*_1(n) < 1 forces every H*_k(s, n) below 1
  if (deg >= 3 || (deg == 2 && f.coefficient(1) >= 1)) {
    // f(j) >= j(j+1): the single sum telescopes below 1 - 1/(n+1)
    Rat bound = 1 - Rat(1, Int(static_cast<unsigned long>(spec.n) + 1));
    bound.canonicalize();
    return bound_certificate(
        spec, "star-h1-telescoped",
        make_report("H*_1(n) <= 1 - 1/(n+1) < 1", Enclosure::point(bound),
                    Enclosure::point(Rat(1))));
  }
  // deg == 2, middle coefficient 0, constant >= 1, max(lead, constant) >= 2:
  // f(j) >= j^2 + 2
  return bound_certificate(spec, "star-h1-zeta", squared_plus_two_series_bound());
}

Certificate star_linear_squares(const CertifyContext& ctx, const SumSpec& spec) {
  (void)ctx;
  // all s_j >= 2 and f = ax+b with a, b >= 1: f(r)^{s_j} >= (r+1)^2, and
  // sum 1/(r+1)^2 <= sum 1/(r(r+1)) telescopes below 1
  Rat bound = 1 - Rat(1, Int(static_cast<unsigned long>(spec.n) + 1));
  bound.canonicalize();
  return bound_certificate(spec, "star-linear-square-domination",
                           make_report("H*_1 of (x+1)^2 <= 1 - 1/(n+1) < 1",
                                       Enclosure::point(bound), Enclosure::point(Rat(1))));
}

// --- strict f = 2x-1 -------------------------------------------------------

Certificate strict_double_linear(const CertifyContext& ctx, const SumSpec& spec) {
  const uint64_t n = spec.n;
  const uint64_t k = spec.k();
  const ExponentTuple& s = spec.s;

  // bound stage: the below-one thresholds for f = 2x + (1-2)
  ThresholdKind threshold = below_one_threshold(Int(2), Int(1), n, k);
  if (threshold != ThresholdKind::Neither) {
    std::string method = threshold == ThresholdKind::SmallN ? "threshold-small-n"
                                                            : "threshold-large-k";
    return bound_certificate(
        spec, method,
        make_report(std::string("below-one threshold (") + threshold_name(threshold) + ")",
                    Enclosure::point(Rat(0)), Enclosure::point(Rat(1))));
  }

  // valuation stage: window prime
  try {
    return window_valuation_certificate(ctx, s, n, k);
  } catch (const NoQualifyingPrime&) {
  }

  if (k >= 9 && k <= 18) {
    auto [pk, nk] = threshold_prime_pair(*ctx.table, static_cast<unsigned>(k));
    (void)pk;
    if (n <= nk) {
      BoundReport row = row_below_one(ctx, k, /*prime_tail=*/false);
      if (row.verdict == Verdict::Holds)
        return bound_certificate(spec, "table-row-domination", row);
    }
    return exact_value_certificate(ctx, spec, "exact-value");
  }

  if (k >= 2 && k <= 8) {
    bool tail_has_ge2 = false;
    for (size_t j = 1; j < s.k(); ++j)
      if (s.exps[j] >= 2) tail_has_ge2 = true;

    if (s.all_ones()) return exact_value_certificate(ctx, spec, "exact-value");

    if (tail_has_ge2) {
      // compare against s' = (1,2,1,...,1) and push n up to n_k
      auto [pk, nk] = threshold_prime_pair(*ctx.table, static_cast<unsigned>(k));
      (void)pk;
      if (n <= nk) {
        BoundReport row = row_below_one(ctx, k, /*prime_tail=*/true);
        if (row.verdict == Verdict::Holds)
          return bound_certificate(spec, "tail-exponent-domination", row);
      }
      return exact_value_certificate(ctx, spec, "exact-value");
    }

    // s_1 >= 2 with a unit tail
    unsigned long s1 = s.exps[0];
    if (n <= 11) {
      if (k == 2) {
        try {
          return small_n_certificate(ctx, s, n);
        } catch (const PreconditionFailed&) {
          return exact_value_certificate(ctx, spec, "exact-value");
        }
      }
      if (k <= 4) {
        SumSpec ones(poly_2xm1(), ExponentTuple::ones(static_cast<size_t>(k)), n,
                     SumMode::Strict);
        Rat hk = compute_exact(ones, ctx.exact);
        if (hk < 1)
          return bound_certificate(spec, "all-ones-domination",
                                   make_report("H_k(ones, n) < 1", Enclosure::point(hk),
                                               Enclosure::point(Rat(1))));
        return exact_value_certificate(ctx, spec, "exact-value");
      }
      // 5 <= k <= 8 joins the table-47 route below
    }
    if (n <= 47) {
      if (k >= 5) {
        BoundReport row = h47_below_one(ctx, k);
        if (row.verdict == Verdict::Holds)
          return bound_certificate(spec, "table-row-domination", row);
        return exact_value_certificate(ctx, spec, "exact-value");
      }
      if (n >= 12 && s1 >= 7) return ln_split_certificate(ctx, s, n, k);
      return exact_value_certificate(ctx, spec, "exact-value");
    }
    if (n <= 1191 && s1 >= 30) return qn_split_certificate(ctx, s, n, k);
    return exact_value_certificate(ctx, spec, "exact-value");
  }

  return exact_value_certificate(ctx, spec, "exact-value");
}

bool is_poly_x(const Polynomial& f) {
  return f.degree() == 1 && f.coefficient(0) == 0 && f.coefficient(1) == 1;
}

bool is_poly_2xm1(const Polynomial& f) {
  return f.degree() == 1 && f.coefficient(0) == -1 && f.coefficient(1) == 2;
}

}  // namespace

bool is_expected_integer_exception(const SumSpec& spec) {
  if (spec.n == 1 && spec.k() == 1) return spec.f.eval(Int(1)) == 1;
  return is_poly_x(spec.f) && spec.mode == SumMode::Strict && spec.n == 3 && spec.k() == 2 &&
         spec.s.all_ones();
}

Certificate certify(const CertifyContext& ctx, const SumSpec& spec) {
  if (!ctx.table) throw InvalidInput("certify needs a prime table");
  const uint64_t n = spec.n;
  const uint64_t k = spec.k();
  if (k > n && spec.mode == SumMode::Strict)
    throw Unsupported("strict certification requires k <= n");

  PolyClass cls = classify(spec.f);
  if (std::holds_alternative<VanishesOnPositiveInteger>(cls))
    throw Unsupported("f has a positive integer root beyond the summation range");
  if (std::holds_alternative<HasNegativeCoefficient>(cls))
    throw Unsupported("polynomials with negative coefficients are not certified");

  const bool fx = is_poly_x(spec.f);
  const bool f2xm1 = is_poly_2xm1(spec.f);
  bool all_ge2 = true;
  for (unsigned long e : spec.s.exps)
    if (e < 2) all_ge2 = false;

  const int deg = spec.f.degree();
  bool nonneg = !spec.f.has_negative_coefficient();
  bool in_family = f2xm1 || fx || (nonneg && (deg >= 2 || (deg == 1 && all_ge2)));
  if (!in_family)
    throw Unsupported("outside the certified families: " + spec.f.str() + " with s = (" +
                      spec.s.str() + ")");

  // stage 1: known exceptions
  if (n == 1) {
    Int f1 = spec.f.eval(Int(1));
    if (f1 == 1) {
      Certificate cert(CertKind::IntegerException, "known-exception", spec);
      cert.integer_value = 1;
      cert.exact_value = Rat(1);
      return cert;
    }
    Rat value(1, ipow(f1, spec.s.exps[0]));
    value.canonicalize();
    Certificate cert(CertKind::BoundBelowOne, "n1-reciprocal", spec);
    cert.exact_value = value;
    cert.cross_checked = true;
    cert.bound = make_report("0 < 1/f(1)^{s_1} < 1", Enclosure::point(value),
                             Enclosure::point(Rat(1)));
    return cert;
  }
  if (fx && spec.mode == SumMode::Strict && n == 3 && k == 2 && spec.s.all_ones()) {
    Rat value = compute_exact(spec, ctx.exact);
    if (value != 1) throw Falsified("expected the harmonic triple to sum to 1");
    Certificate cert(CertKind::IntegerException, "known-exception", spec);
    cert.integer_value = 1;
    cert.exact_value = value;
    return cert;
  }

  // star mode, and strict k = 1 (identical sums)
  if (spec.mode == SumMode::Star || k == 1) {
    if (f2xm1) {
      Certificate cert = star_bertrand_certificate(ctx, spec.s, n);
      cert.spec = spec;  // keep the caller's mode; the k = 1 sums coincide
      return cert;
    }
    if (std::holds_alternative<MonomialXPower>(cls) || std::holds_alternative<Monomial>(cls))
      return monomial_certificate(ctx, spec);
    if (std::holds_alternative<XSquaredPlusOne>(cls)) return star_squared_plus_one(ctx, spec);
    if (std::holds_alternative<DegreeAtLeastTwoMultiterm>(cls)) return star_multiterm(ctx, spec);
    if (std::holds_alternative<Linear>(cls)) return star_linear_squares(ctx, spec);
    throw Unsupported("no star strategy for " + spec.f.str());
  }

  // strict mode, k >= 2
  if (f2xm1) return strict_double_linear(ctx, spec);
  if (fx && !all_ge2) return exact_value_certificate(ctx, spec, "exact-value");

  // every value f(r)^{s_j} dominates r^2 here
  BoundReport sq = strict_square_below_one(k);
  if (sq.verdict == Verdict::Holds)
    return bound_certificate(spec, "square-domination", sq);
  return exact_value_certificate(ctx, spec, "exact-value");
}

}  // namespace mrs
