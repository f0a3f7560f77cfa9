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

// Command-line front end; talks to the engine exclusively through the
// shared library's C API (mrsums.h).

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "mrsums.h"

namespace {

struct EngineDeleter {
  void operator()(mrs_engine* e) const { mrs_engine_free(e); }
};
using EnginePtr = std::unique_ptr<mrs_engine, EngineDeleter>;

struct StringDeleter {
  void operator()(char* s) const { mrs_string_free(s); }
};
using ResultPtr = std::unique_ptr<char, StringDeleter>;

int exit_code(mrs_status status) {
  switch (status) {
    case MRS_OK: return 0;
    case MRS_ERR_INVALID: return 2;
    case MRS_ERR_UNSUPPORTED: return 2;
    case MRS_ERR_BUDGET: return 3;
    case MRS_ERR_FALSIFIED: return 4;
    case MRS_ERR_NOT_FOUND: return 4;   // a missing witness falsifies a claim
    case MRS_ERR_UNDECIDED: return 4;
    default: return 1;
  }
}

mrs_mode parse_mode(const std::string& mode) {
  if (mode == "strict") return MRS_MODE_STRICT;
  if (mode == "star") return MRS_MODE_STAR;
  throw CLI::ValidationError("--mode", "expected strict|star");
}

mrs_format parse_format(const std::string& fmt) {
  if (fmt == "text") return MRS_FORMAT_TEXT;
  if (fmt == "json") return MRS_FORMAT_JSON;
  if (fmt == "csv") return MRS_FORMAT_CSV;
  throw CLI::ValidationError("--format", "expected text|json|csv");
}

mrs_backend parse_backend(const std::string& backend) {
  if (backend == "auto") return MRS_BACKEND_AUTO;
  if (backend == "exact") return MRS_BACKEND_EXACT;
  if (backend == "enclosure") return MRS_BACKEND_ENCLOSURE;
  throw CLI::ValidationError("--backend", "expected auto|exact|enclosure");
}

// "a:b" or a single value
void parse_range(const std::string& text, uint64_t& lo, uint64_t& hi) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      lo = hi = std::stoull(text);
    } else {
      lo = std::stoull(text.substr(0, colon));
      hi = std::stoull(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or LO:HI");
  }
}

int report(mrs_engine* engine, mrs_status status, char* result) {
  ResultPtr holder(result);
  if (result) std::fputs(result, stdout);
  if (status != MRS_OK) std::fprintf(stderr, "error: %s\n", mrs_last_error(engine));
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiple reciprocal sums, enclosures and integrality certificates"};
  app.set_config("--config", "", "read options from an INI file");
  app.require_subcommand(1);

  // engine knobs (flags beat env vars beat defaults)
  uint64_t sieve_limit = 0, digit_budget = 0, nk_budget = 0;
  unsigned threads = 0;
  std::string default_width;
  app.add_option("--sieve-limit", sieve_limit, "prime sieve bound (default 2000000)")
      ->envname("MRSUMS_SIEVE_LIMIT");
  app.add_option("--digit-budget", digit_budget,
                 "exact-backend denominator budget, decimal digits (default 2000000)")
      ->envname("MRSUMS_DIGIT_BUDGET");
  app.add_option("--nk-budget", nk_budget,
                 "certifier exact-fallback budget on n*k (default 5000)")
      ->envname("MRSUMS_NK_BUDGET");
  app.add_option("--threads", threads, "sweep parallelism (default: cores)")
      ->envname("MRSUMS_THREADS");
  app.add_option("--default-width", default_width, "default enclosure width (default 1e-12)")
      ->envname("MRSUMS_DEFAULT_WIDTH");

  std::string f_text, s_text = "1", mode = "strict", format = "text", backend = "auto";
  std::string width, tuples = "allones", n_range, k_range = "0";
  uint64_t n = 1, seed = 1;
  bool extended = false, no_reduce = false, trace = false;

  CLI::App* compute = app.add_subcommand("compute", "evaluate one sum");
  compute->add_option("--f", f_text, "polynomial, e.g. \"x^2+1\" or \"2x-1\"")->required();
  compute->add_option("--s", s_text, "exponents, e.g. \"1,1\" or \"30,1x7\"");
  compute->add_option("--n", n, "upper summation limit")->required();
  compute->add_option("--mode", mode, "strict|star");
  compute->add_option("--backend", backend, "auto|exact|enclosure");
  compute->add_option("--width", width, "enclosure width, e.g. 1e-3");
  compute->add_flag("--no-reduce", no_reduce,
                    "defer gcd reduction to output (exact backend timing experiments)");
  compute->add_flag("--trace", trace, "report prefix values that land on integers");
  compute->add_option("--format", format, "text|json|csv");

  CLI::App* certify = app.add_subcommand("certify", "emit an integrality certificate");
  certify->add_option("--f", f_text, "polynomial")->required();
  certify->add_option("--s", s_text, "exponents");
  certify->add_option("--n", n, "upper summation limit")->required();
  certify->add_option("--mode", mode, "strict|star");
  certify->add_option("--format", format, "text|json|csv");

  CLI::App* table = app.add_subcommand("table", "print a reference table (1, 2 or 3)");
  int table_id = 0;
  table->add_option("id", table_id, "table number")->required();
  table->add_flag("--extended", extended, "include the long-running rows of table 2 (k >= 11)");
  table->add_option("--width", width, "enclosure width (default 1e-3)");
  table->add_option("--format", format, "text|json|csv");

  CLI::App* sweep = app.add_subcommand("sweep", "certify a whole grid");
  sweep->add_option("--f", f_text, "polynomial")->required();
  sweep->add_option("--n", n_range, "n range LO:HI")->required();
  sweep->add_option("--k", k_range, "k range LO:HI (0 = up to n)");
  sweep->add_option("--mode", mode, "strict|star");
  sweep->add_option("--tuples", tuples, "allones|alltwos|random[:count]");
  sweep->add_option("--seed", seed, "seed for random tuples");
  sweep->add_option("--format", format, "text|json|csv");

  CLI::App* primes = app.add_subcommand("primes", "prime-search queries");
  std::string prime_cmd;
  std::vector<std::string> prime_args;
  primes->add_option("query", prime_cmd,
                     "nth|maxgap|bertrand|dusart|window|table1|qn|ln")
      ->required();
  primes->add_option("args", prime_args, "query arguments");

  CLI11_PARSE(app, argc, argv);

  EnginePtr engine(mrs_engine_new_with(sieve_limit, digit_budget, nk_budget,
                                       default_width.empty() ? nullptr : default_width.c_str(),
                                       threads));
  if (!engine) {
    std::fprintf(stderr, "error: engine construction failed\n");
    return 1;
  }

  char* out = nullptr;
  if (compute->parsed()) {
    unsigned flags = (no_reduce ? MRS_COMPUTE_NO_REDUCE : 0u) | (trace ? MRS_COMPUTE_TRACE : 0u);
    mrs_status st = mrs_compute(engine.get(), f_text.c_str(), s_text.c_str(), n,
                                parse_mode(mode), parse_backend(backend),
                                width.empty() ? nullptr : width.c_str(), flags,
                                parse_format(format), &out);
    return report(engine.get(), st, out);
  }
  if (certify->parsed()) {
    mrs_status st = mrs_certify(engine.get(), f_text.c_str(), s_text.c_str(), n,
                                parse_mode(mode), parse_format(format), &out);
    return report(engine.get(), st, out);
  }
  if (table->parsed()) {
    mrs_status st = mrs_table(engine.get(), table_id, extended ? 1 : 0,
                              width.empty() ? nullptr : width.c_str(), parse_format(format), &out);
    return report(engine.get(), st, out);
  }
  if (sweep->parsed()) {
    uint64_t n_lo, n_hi, k_lo, k_hi;
    parse_range(n_range, n_lo, n_hi);
    parse_range(k_range, k_lo, k_hi);
    if (k_lo == 0) k_lo = 1;  // "0" means the full 1..n span
    mrs_status st = mrs_sweep(engine.get(), f_text.c_str(), parse_mode(mode), n_lo, n_hi, k_lo,
                              k_hi, tuples.c_str(), seed, parse_format(format), &out);
    return report(engine.get(), st, out);
  }
  if (primes->parsed()) {
    auto need = [&](size_t count) {
      if (prime_args.size() != count)
        throw CLI::ValidationError("primes", "wrong number of arguments");
    };
    auto arg_u64 = [&](size_t i) { return std::stoull(prime_args.at(i)); };
    uint64_t value = 0, extra = 0;
    mrs_status st = MRS_ERR_INVALID;
    try {
      if (prime_cmd == "nth") {
        need(1);
        st = mrs_prime_nth(engine.get(), arg_u64(0), &value);
      } else if (prime_cmd == "maxgap") {
        need(1);
        st = mrs_prime_max_gap(engine.get(), arg_u64(0), &value);
      } else if (prime_cmd == "bertrand") {
        need(1);
        st = mrs_prime_bertrand(engine.get(), arg_u64(0), &value);
      } else if (prime_cmd == "dusart") {
        need(1);
        st = mrs_prime_dusart(engine.get(), prime_args.at(0).c_str(), &value);
      } else if (prime_cmd == "window") {
        need(2);
        st = mrs_prime_window(engine.get(), arg_u64(0), arg_u64(1), &value);
      } else if (prime_cmd == "table1") {
        need(1);
        st = mrs_prime_threshold_pair(engine.get(), arg_u64(0), &value, &extra);
        if (st == MRS_OK) {
          std::printf("%llu %llu\n", static_cast<unsigned long long>(value),
                      static_cast<unsigned long long>(extra));
          return 0;
        }
      } else if (prime_cmd == "qn") {
        need(1);
        st = mrs_prime_qn(engine.get(), arg_u64(0), &value);
      } else if (prime_cmd == "ln") {
        need(1);
        st = mrs_prime_ln(engine.get(), arg_u64(0), &value);
      } else {
        std::fprintf(stderr, "error: unknown primes query '%s'\n", prime_cmd.c_str());
        return 2;
      }
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 2;
    }
    if (st == MRS_OK) {
      std::printf("%llu\n", static_cast<unsigned long long>(value));
      return 0;
    }
    std::fprintf(stderr, "error: %s\n", mrs_last_error(engine.get()));
    return exit_code(st);
  }
  return 2;
}
