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

#include "engine.hpp"

#include <thread>

#include "errors.hpp"

namespace mrs {

Engine::Engine(EngineOptions opts) : opts_(opts), table_(opts.sieve_limit) {
  if (opts_.default_width <= 0) throw InvalidInput("default width must be positive");
}

unsigned Engine::effective_threads() const {
  if (opts_.threads > 0) return opts_.threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

CertifyContext Engine::ctx() const {
  CertifyContext c;
  c.table = &table_;
  c.exact.max_denominator_digits = opts_.digit_budget;
  c.exact_nk_budget = opts_.exact_nk_budget;
  c.cross_check = opts_.cross_check;
  return c;
}

ComputeResult Engine::compute(const std::string& f_text, const std::string& s_text, uint64_t n,
                              SumMode mode, Backend backend, const std::optional<Rat>& width,
                              bool reduce, bool trace) const {
  Polynomial f = Polynomial::parse(f_text);
  ExponentTuple s = ExponentTuple::parse(s_text);
  SumSpec spec(f, s, n, mode);
  Rat w = width.value_or(opts_.default_width);

  ComputeResult result;
  result.f = f.str();
  result.s = s.str();
  result.n = n;
  result.mode = mode;
  result.traced = trace;

  ExactOptions exact_opts;
  exact_opts.reduce = reduce;
  exact_opts.max_denominator_digits = opts_.digit_budget;
  if (trace) exact_opts.trace = &result.trace;

  switch (backend) {
    case Backend::Exact:
      result.exact = compute_exact(spec, exact_opts);
      result.backend = "exact";
      break;
    case Backend::EnclosureOnly:
      result.enclosure = compute_enclosure(spec, w);
      result.backend = "enclosure";
      break;
    case Backend::Auto:
      try {
        result.exact = compute_exact(spec, exact_opts);
        result.backend = "exact";
      } catch (const BudgetExceeded&) {
        result.enclosure = compute_enclosure(spec, w);
        result.backend = "enclosure";
      }
      break;
  }
  return result;
}

Certificate Engine::run_certify(const std::string& f_text, const std::string& s_text, uint64_t n,
                                SumMode mode) const {
  Polynomial f = Polynomial::parse(f_text);
  ExponentTuple s = ExponentTuple::parse(s_text);
  SumSpec spec(f, s, n, mode);
  return certify(ctx(), spec);
}

std::vector<Table1Row> Engine::run_table1() const { return table1(ctx()); }

std::vector<ValueRow> Engine::run_table2(const std::optional<Rat>& width,
                                         bool include_extended) const {
  return table2(ctx(), width.value_or(make_rat(1, 1000)), include_extended);
}

std::vector<ValueRow> Engine::run_table3(const std::optional<Rat>& width) const {
  return table3(ctx(), width.value_or(make_rat(1, 1000)));
}

SweepResult Engine::run_sweep(const std::string& f_text, SumMode mode, uint64_t n_lo,
                              uint64_t n_hi, uint64_t k_lo, uint64_t k_hi,
                              const std::string& tuple_gen, uint64_t seed) const {
  SweepConfig config;
  config.f = Polynomial::parse(f_text);
  config.mode = mode;
  config.n_lo = n_lo;
  config.n_hi = n_hi;
  config.k_lo = k_lo;
  config.k_hi = k_hi;
  unsigned count = 10;
  config.gen = parse_tuple_gen(tuple_gen, &count);
  config.random_count = count;
  config.seed = seed;
  config.threads = effective_threads();
  return mrs::run_sweep(ctx(), config);
}

}  // namespace mrs
