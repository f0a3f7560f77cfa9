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

#ifndef MRSUMS_ENGINE_HPP
#define MRSUMS_ENGINE_HPP

#include <memory>

#include "report.hpp"

namespace mrs {

struct EngineOptions {
  uint64_t sieve_limit = PrimeTable::kDefaultLimit;
  std::size_t digit_budget = 2000000;
  uint64_t exact_nk_budget = 5000;
  Rat default_width = make_rat(1, 1) / Rat(ipow(Int(10), 12));  // 1e-12
  unsigned threads = 0;  // 0: hardware concurrency
  bool cross_check = true;
};

enum class Backend { Auto, Exact, EnclosureOnly };

// Owns the prime table and budget knobs; the unit the C API hands out as
// an opaque handle. Build once, query from anywhere (queries are const and
// the table is immutable).
class Engine {
 public:
  explicit Engine(EngineOptions opts = {});

  const PrimeTable& table() const { return table_; }
  const EngineOptions& options() const { return opts_; }
  unsigned effective_threads() const;
  CertifyContext ctx() const;

  ComputeResult compute(const std::string& f_text, const std::string& s_text, uint64_t n,
                        SumMode mode, Backend backend, const std::optional<Rat>& width,
                        bool reduce = true, bool trace = false) const;
  Certificate run_certify(const std::string& f_text, const std::string& s_text, uint64_t n,
                          SumMode mode) const;
  std::vector<Table1Row> run_table1() const;
  std::vector<ValueRow> run_table2(const std::optional<Rat>& width, bool include_extended) const;
  std::vector<ValueRow> run_table3(const std::optional<Rat>& width) const;
  SweepResult run_sweep(const std::string& f_text, SumMode mode, uint64_t n_lo, uint64_t n_hi,
                        uint64_t k_lo, uint64_t k_hi, const std::string& tuple_gen,
                        uint64_t seed) const;

 private:
  EngineOptions opts_;
  PrimeTable table_;
};

}  // namespace mrs

#endif
