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

#ifndef MRSUMS_ERRORS_HPP
#define MRSUMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mrs {

// Status values double as CLI exit codes (0 ok, 2 invalid input,
// 3 budget exceeded, 4 falsified expectation).
enum class Status {
  Ok = 0,
  InvalidInput = 2,
  BudgetExceeded = 3,
  Falsified = 4,
  Unsupported = 5,
  NotFound = 6,
  Undecidable = 7,
  Internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what) : Error(Status::InvalidInput, what) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(Status::BudgetExceeded, what) {}
};

struct Falsified : Error {
  explicit Falsified(const std::string& what) : Error(Status::Falsified, what) {}
};

struct Unsupported : Error {
  explicit Unsupported(const std::string& what) : Error(Status::Unsupported, what) {}
};

struct NotFound : Error {
  explicit NotFound(const std::string& what) : Error(Status::NotFound, what) {}
};

// A comparison that stayed undecided at maximum precision. Signals a bug
// or a near-tie, never silently guessed around.
struct Undecidable : Error {
  explicit Undecidable(const std::string& what) : Error(Status::Undecidable, what) {}
};

struct PreconditionFailed : InvalidInput {
  explicit PreconditionFailed(const std::string& what) : InvalidInput(what) {}
};

struct NoQualifyingPrime : NotFound {
  explicit NoQualifyingPrime(const std::string& what) : NotFound(what) {}
};

}  // namespace mrs

#endif
