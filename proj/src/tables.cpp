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

#include "tables.hpp"

#include "errors.hpp"

namespace mrs {

namespace {

const Polynomial& poly_2xm1() {
  static const Polynomial f = Polynomial::parse("2x-1");
  return f;
}

ValueRow value_row(const CertifyContext& ctx, unsigned k, uint64_t n, const Rat& width) {
  ValueRow row{k, n, std::nullopt, false, "ok"};
  try {
    SumSpec spec(poly_2xm1(), ExponentTuple::ones(k), n, SumMode::Strict);
    row.value = compute_enclosure(spec, width);
  } catch (const Error& e) {
    row.status = e.what();
  }
  (void)ctx;
  return row;
}

}  // namespace

std::vector<Table1Row> table1(const CertifyContext& ctx) {
  std::vector<Table1Row> rows;
  for (unsigned k = 2; k <= 18; ++k) {
    auto [pk, nk] = threshold_prime_pair(*ctx.table, k);
    rows.push_back(Table1Row{k, pk, nk});
  }
  return rows;
}

std::vector<ValueRow> table2(const CertifyContext& ctx, const Rat& width, bool include_extended) {
  std::vector<ValueRow> rows;
  for (unsigned k = 2; k <= 18; ++k) {
    bool extended = k >= 11;
    if (extended && !include_extended) continue;
    auto [pk, nk] = threshold_prime_pair(*ctx.table, k);
    (void)pk;
    ValueRow row = value_row(ctx, k, nk, width);
    row.extended = extended;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ValueRow> table3(const CertifyContext& ctx, const Rat& width) {
  std::vector<ValueRow> rows;
  for (unsigned k = 5; k <= 8; ++k) rows.push_back(value_row(ctx, k, 47, width));
  return rows;
}

}  // namespace mrs
