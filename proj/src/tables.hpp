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

#ifndef MRSUMS_TABLES_HPP
#define MRSUMS_TABLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "certify.hpp"

namespace mrs {

// Built-in reference tables for f = 2x-1.
//   1: the window-threshold pairs (p(k), n_k) for k = 2..18, exact
//   2: enclosures of H_k(ones, n_k) for k = 2..18
//   3: enclosures of H_k(ones, 47) for k = 5..8

struct Table1Row {
  unsigned k;
  uint64_t pk, nk;
};

struct ValueRow {
  unsigned k;
  uint64_t n;
  std::optional<Enclosure> value;
  bool extended = false;   // row beyond the fast set (table 2, k >= 11)
  std::string status;      // "ok" or the failure reason
};

std::vector<Table1Row> table1(const CertifyContext& ctx);
std::vector<ValueRow> table2(const CertifyContext& ctx, const Rat& width, bool include_extended);
std::vector<ValueRow> table3(const CertifyContext& ctx, const Rat& width);

}  // namespace mrs

#endif
