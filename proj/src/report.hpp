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

#ifndef MRSUMS_REPORT_HPP
#define MRSUMS_REPORT_HPP

#include <optional>
#include <string>

#include "certify.hpp"
#include "sweep.hpp"
#include "tables.hpp"

namespace mrs {

enum class OutputFormat { Text, Json, Csv };

struct ComputeResult {
  std::string f;
  std::string s;
  uint64_t n = 1;
  SumMode mode = SumMode::Strict;
  std::string backend;  // "exact" or "enclosure"
  std::optional<Rat> exact;
  std::optional<Enclosure> enclosure;
  std::vector<TraceHit> trace;
  bool traced = false;
};

constexpr int kDecimalDigits = 12;

std::string render_compute(const ComputeResult& r, OutputFormat format);
std::string render_certificate(const Certificate& cert, OutputFormat format);
std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat format);
std::string render_value_table(int id, const std::vector<ValueRow>& rows, OutputFormat format);
std::string render_sweep(const SweepResult& result, OutputFormat format);
std::string render_bound_reports(const std::vector<BoundReport>& reports, OutputFormat format);

}  // namespace mrs

#endif
