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

#include "mrsums.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "engine.hpp"
#include "errors.hpp"

struct mrs_engine {
  mrs::Engine engine;
  std::string last_error;

  explicit mrs_engine(mrs::EngineOptions opts) : engine(opts) {}
};

namespace {

constexpr const char* kVersion = "0.1.0";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mrs_status status_of(const mrs::Error& e) { return static_cast<mrs_status>(e.status()); }

template <typename Fn>
mrs_status guarded(mrs_engine* engine, Fn&& fn) {
  if (!engine) return MRS_ERR_INVALID;
  engine->last_error.clear();
  try {
    fn();
    return MRS_OK;
  } catch (const mrs::Error& e) {
    engine->last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    engine->last_error = "out of memory";
    return MRS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    engine->last_error = e.what();
    return MRS_ERR_INTERNAL;
  }
}

mrs::SumMode to_mode(mrs_mode m) {
  return m == MRS_MODE_STAR ? mrs::SumMode::Star : mrs::SumMode::Strict;
}

mrs::OutputFormat to_format(mrs_format f) {
  switch (f) {
    case MRS_FORMAT_JSON: return mrs::OutputFormat::Json;
    case MRS_FORMAT_CSV: return mrs::OutputFormat::Csv;
    default: return mrs::OutputFormat::Text;
  }
}

std::optional<mrs::Rat> to_width(const char* width) {
  if (!width || !*width) return std::nullopt;
  mrs::Rat w = mrs::parse_rat(width);
  if (w <= 0) throw mrs::InvalidInput("width must be positive");
  return w;
}

mrs_status emit(mrs_engine* engine, char** out, const std::string& text) {
  *out = dup_string(text);
  if (!*out) {
    engine->last_error = "out of memory";
    return MRS_ERR_INTERNAL;
  }
  return MRS_OK;
}

}  // namespace

extern "C" {

mrs_engine* mrs_engine_new(void) { return mrs_engine_new_with(0, 0, 0, nullptr, 0); }

mrs_engine* mrs_engine_new_with(uint64_t sieve_limit, uint64_t digit_budget,
                                uint64_t exact_nk_budget, const char* default_width,
                                unsigned threads) {
  try {
    mrs::EngineOptions opts;
    if (sieve_limit) opts.sieve_limit = sieve_limit;
    if (digit_budget) opts.digit_budget = digit_budget;
    if (exact_nk_budget) opts.exact_nk_budget = exact_nk_budget;
    if (default_width && *default_width) opts.default_width = mrs::parse_rat(default_width);
    opts.threads = threads;
    return new mrs_engine(opts);
  } catch (...) {
    return nullptr;
  }
}

void mrs_engine_free(mrs_engine* engine) { delete engine; }

const char* mrs_last_error(const mrs_engine* engine) {
  return engine ? engine->last_error.c_str() : "null engine";
}

const char* mrs_version(void) { return kVersion; }

void mrs_string_free(char* s) { ::free(s); }

mrs_status mrs_compute(mrs_engine* engine, const char* f, const char* s, uint64_t n,
                       mrs_mode mode, mrs_backend backend, const char* width, unsigned flags,
                       mrs_format format, char** out) {
  if (!out || !f || !s) return MRS_ERR_INVALID;
  return guarded(engine, [&] {
    mrs::Backend b = backend == MRS_BACKEND_EXACT       ? mrs::Backend::Exact
                     : backend == MRS_BACKEND_ENCLOSURE ? mrs::Backend::EnclosureOnly
                                                        : mrs::Backend::Auto;
    mrs::ComputeResult result =
        engine->engine.compute(f, s, n, to_mode(mode), b, to_width(width),
                               (flags & MRS_COMPUTE_NO_REDUCE) == 0,
                               (flags & MRS_COMPUTE_TRACE) != 0);
    mrs_status st = emit(engine, out, mrs::render_compute(result, to_format(format)));
    if (st != MRS_OK) throw mrs::Error(mrs::Status::Internal, engine->last_error);
  });
}

mrs_status mrs_certify(mrs_engine* engine, const char* f, const char* s, uint64_t n,
                       mrs_mode mode, mrs_format format, char** out) {
  if (!out || !f || !s) return MRS_ERR_INVALID;
  return guarded(engine, [&] {
    mrs::Certificate cert = engine->engine.run_certify(f, s, n, to_mode(mode));
    mrs_status st = emit(engine, out, mrs::render_certificate(cert, to_format(format)));
    if (st != MRS_OK) throw mrs::Error(mrs::Status::Internal, engine->last_error);
  });
}

mrs_status mrs_table(mrs_engine* engine, int table_id, int include_extended, const char* width,
                     mrs_format format, char** out) {
  if (!out) return MRS_ERR_INVALID;
  return guarded(engine, [&] {
    std::string text;
    auto w = to_width(width);
    switch (table_id) {
      case 1:
        text = mrs::render_table1(engine->engine.run_table1(), to_format(format));
        break;
      case 2:
        text = mrs::render_value_table(2, engine->engine.run_table2(w, include_extended != 0),
                                       to_format(format));
        break;
      case 3:
        text = mrs::render_value_table(3, engine->engine.run_table3(w), to_format(format));
        break;
      default:
        throw mrs::InvalidInput("table id must be 1, 2 or 3");
    }
    mrs_status st = emit(engine, out, text);
    if (st != MRS_OK) throw mrs::Error(mrs::Status::Internal, engine->last_error);
  });
}

mrs_status mrs_sweep(mrs_engine* engine, const char* f, mrs_mode mode, uint64_t n_lo,
                     uint64_t n_hi, uint64_t k_lo, uint64_t k_hi, const char* tuple_gen,
                     uint64_t seed, mrs_format format, char** out) {
  if (!out || !f || !tuple_gen) return MRS_ERR_INVALID;
  mrs_status st = guarded(engine, [&] {
    mrs::SweepResult result =
        engine->engine.run_sweep(f, to_mode(mode), n_lo, n_hi, k_lo, k_hi, tuple_gen, seed);
    mrs_status es = emit(engine, out, mrs::render_sweep(result, to_format(format)));
    if (es != MRS_OK) throw mrs::Error(mrs::Status::Internal, engine->last_error);
    if (result.unexpected_integer())
      throw mrs::Falsified("sweep found an integer value outside the known exception set");
    if (!result.ok()) throw mrs::InvalidInput("sweep finished with unsupported cases or errors");
  });
  return st;
}

mrs_status mrs_prime_nth(mrs_engine* engine, uint64_t index, uint64_t* out_prime) {
  if (!out_prime) return MRS_ERR_INVALID;
  return guarded(engine,
                 [&] { *out_prime = engine->engine.table().nth(static_cast<size_t>(index)); });
}

mrs_status mrs_prime_max_gap(mrs_engine* engine, uint64_t upto_index, uint64_t* out_gap) {
  if (!out_gap) return MRS_ERR_INVALID;
  return guarded(engine, [&] {
    *out_gap = mrs::max_prime_gap(engine->engine.table(), static_cast<size_t>(upto_index));
  });
}

mrs_status mrs_prime_bertrand(mrs_engine* engine, uint64_t n, uint64_t* out_prime) {
  if (!out_prime) return MRS_ERR_INVALID;
  return guarded(engine, [&] { *out_prime = mrs::bertrand_prime(engine->engine.table(), n); });
}

mrs_status mrs_prime_dusart(mrs_engine* engine, const char* x, uint64_t* out_prime) {
  if (!out_prime || !x) return MRS_ERR_INVALID;
  return guarded(engine, [&] {
    *out_prime = mrs::dusart_prime(engine->engine.table(), mrs::parse_rat(x));
  });
}

mrs_status mrs_prime_window(mrs_engine* engine, uint64_t n, uint64_t k, uint64_t* out_prime) {
  if (!out_prime) return MRS_ERR_INVALID;
  return guarded(engine,
                 [&] { *out_prime = mrs::scaled_window_prime(engine->engine.table(), n, k); });
}

mrs_status mrs_prime_threshold_pair(mrs_engine* engine, uint64_t k, uint64_t* out_p,
                                    uint64_t* out_nk) {
  if (!out_p || !out_nk) return MRS_ERR_INVALID;
  return guarded(engine, [&] {
    auto [p, nk] =
        mrs::threshold_prime_pair(engine->engine.table(), static_cast<unsigned>(k));
    *out_p = p;
    *out_nk = nk;
  });
}

mrs_status mrs_prime_qn(mrs_engine* engine, uint64_t n, uint64_t* out_prime) {
  if (!out_prime) return MRS_ERR_INVALID;
  return guarded(engine, [&] { *out_prime = mrs::qn_prime(engine->engine.table(), n); });
}

mrs_status mrs_prime_ln(mrs_engine* engine, uint64_t n, uint64_t* out_prime) {
  if (!out_prime) return MRS_ERR_INVALID;
  return guarded(engine, [&] { *out_prime = mrs::ln_prime(engine->engine.table(), n); });
}

}  // extern "C"
