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

#ifndef MRSUMS_SWEEP_HPP
#define MRSUMS_SWEEP_HPP

#include <map>
#include <string>
#include <vector>

#include "certify.hpp"

namespace mrs {

enum class TupleGen { AllOnes, AllTwos, Random };

TupleGen parse_tuple_gen(const std::string& text, unsigned* count);

struct SweepConfig {
  Polynomial f;
  SumMode mode = SumMode::Strict;
  uint64_t n_lo = 2, n_hi = 2;
  uint64_t k_lo = 1;
  uint64_t k_hi = 0;  // 0: k runs up to n
  TupleGen gen = TupleGen::AllOnes;
  unsigned random_count = 10;    // tuples per (n, k) under Random
  unsigned long max_exponent = 3;
  uint64_t seed = 1;
  unsigned threads = 1;
};

struct SweepEntry {
  uint64_t n = 0, k = 0;
  std::string s;
  std::string kind;
  std::string method;
  bool expected = false;  // for integer cases: inside the known exception set
};

struct SweepResult {
  uint64_t total = 0;
  std::map<std::string, uint64_t> kind_counts;
  std::map<std::string, uint64_t> method_counts;
  std::vector<SweepEntry> integer_cases;
  uint64_t expected_integer_cases = 0;  // how many the grid should contain
  uint64_t unsupported = 0;
  std::vector<std::string> errors;
  double wall_seconds = 0;

  bool unexpected_integer() const;
  bool ok() const;
};

// Deterministic for a fixed config (tuples derive from seed and grid
// position, independent of the thread count).
SweepResult run_sweep(const CertifyContext& ctx, const SweepConfig& config);

// Exponent tuple for grid position (n, k, index) under the generator.
ExponentTuple sweep_tuple(const SweepConfig& config, uint64_t n, uint64_t k, unsigned index);

}  // namespace mrs

#endif
