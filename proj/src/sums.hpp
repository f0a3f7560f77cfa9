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

#ifndef MRSUMS_SUMS_HPP
#define MRSUMS_SUMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "enclosure.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace mrs {

// The exponent tuple (s_1, ..., s_k), all entries >= 1.
struct ExponentTuple {
  std::vector<unsigned long> exps;

  ExponentTuple() = default;
  explicit ExponentTuple(std::vector<unsigned long> e);
  static ExponentTuple ones(size_t k);
  static ExponentTuple repeated(unsigned long s, size_t k);
  // "2,1,1", with repetition shorthand "1x5" and "30,1x7".
  static ExponentTuple parse(const std::string& text);

  size_t k() const { return exps.size(); }
  unsigned long total() const;
  bool all_ones() const;
  std::string str() const;
  bool operator==(const ExponentTuple& o) const { return exps == o.exps; }
};

enum class SumMode { Strict, Star };

const char* mode_name(SumMode m);

// One sum instance: sum over increasing (Strict) or weakly increasing
// (Star) k-tuples i_1 .. i_k <= n of prod 1/f(i_j)^{s_j}.
// Construction validates k, n and that f(m) != 0 for 1 <= m <= n.
struct SumSpec {
  Polynomial f;
  ExponentTuple s;
  uint64_t n = 1;
  SumMode mode = SumMode::Strict;

  SumSpec(Polynomial f, ExponentTuple s, uint64_t n, SumMode mode);
  size_t k() const { return s.k(); }
};

struct TraceHit {
  uint64_t index;  // sweep position, reported as the appendix-style i-k+j
  size_t level;    // j
};

struct ExactOptions {
  bool reduce = true;  // gcd-reduce prefix values after every update
  std::size_t max_denominator_digits = 2000000;
  std::vector<TraceHit>* trace = nullptr;  // records integral prefix values
};

// Exact value via the prefix-sum sweep. Strict mode with k > n gives 0.
Rat compute_exact(const SumSpec& spec, const ExactOptions& opts = {});

// Direct enumeration of all index tuples; the independent oracle.
// Refuses more than 10^6 tuples.
Rat compute_bruteforce(const SumSpec& spec);

// The same sweep in fixed-precision dyadic interval arithmetic; precision
// escalates until the requested width is met.
Enclosure compute_enclosure(const SumSpec& spec, const Rat& width);

uint64_t bruteforce_tuple_count(const SumSpec& spec);

}  // namespace mrs

#endif
