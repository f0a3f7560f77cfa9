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

#include "sweep.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "errors.hpp"

namespace mrs {

TupleGen parse_tuple_gen(const std::string& text, unsigned* count) {
  if (text == "allones" || text == "ones") return TupleGen::AllOnes;
  if (text == "alltwos" || text == "twos") return TupleGen::AllTwos;
  if (text.rfind("random", 0) == 0) {
    if (count) {
      *count = 10;
      auto colon = text.find(':');
      if (colon != std::string::npos) {
        try {
          *count = static_cast<unsigned>(std::stoul(text.substr(colon + 1)));
        } catch (const std::exception&) {
          throw InvalidInput("bad tuple generator: " + text);
        }
      }
    }
    return TupleGen::Random;
  }
  throw InvalidInput("unknown tuple generator: " + text + " (allones|alltwos|random[:count])");
}

bool SweepResult::unexpected_integer() const {
  for (const auto& e : integer_cases)
    if (!e.expected) return true;
  return false;
}

bool SweepResult::ok() const {
  return unsupported == 0 && errors.empty() && !unexpected_integer() &&
         integer_cases.size() == expected_integer_cases;
}

ExponentTuple sweep_tuple(const SweepConfig& config, uint64_t n, uint64_t k, unsigned index) {
  switch (config.gen) {
    case TupleGen::AllOnes:
      return ExponentTuple::ones(static_cast<size_t>(k));
    case TupleGen::AllTwos:
      return ExponentTuple::repeated(2, static_cast<size_t>(k));
    case TupleGen::Random: {
      // position-keyed seeding keeps sweeps deterministic under sharding
      std::mt19937_64 rng(config.seed * 0x9e3779b97f4a7c15ull + n * 1000003ull + k * 1009ull +
                          index);
      std::uniform_int_distribution<unsigned long> dist(1, config.max_exponent);
      std::vector<unsigned long> exps(static_cast<size_t>(k));
      for (auto& e : exps) e = dist(rng);
      return ExponentTuple(std::move(exps));
    }
  }
  throw Error(Status::Internal, "unreachable");
}

namespace {

struct Job {
  uint64_t n, k;
  unsigned tuple_index;
};

}  // namespace

SweepResult run_sweep(const CertifyContext& ctx, const SweepConfig& config) {
  if (config.n_lo < 1 || config.n_hi < config.n_lo) throw InvalidInput("empty n range");
  if (config.k_lo < 1) throw InvalidInput("k range must start at 1");
  auto start = std::chrono::steady_clock::now();

  std::vector<Job> jobs;
  unsigned tuples = config.gen == TupleGen::Random ? config.random_count : 1;
  if (tuples < 1) throw InvalidInput("random tuple count must be positive");
  for (uint64_t n = config.n_lo; n <= config.n_hi; ++n) {
    uint64_t k_hi = config.k_hi == 0 ? n : std::min(config.k_hi, n);
    for (uint64_t k = config.k_lo; k <= k_hi; ++k)
      for (unsigned t = 0; t < tuples; ++t) jobs.push_back(Job{n, k, t});
  }

  struct Outcome {
    SweepEntry entry;
    int status = 0;  // 0 ok, 1 unsupported, 2 error
    std::string message;
  };
  std::vector<Outcome> outcomes(jobs.size());

  auto work = [&](size_t idx) {
    const Job& job = jobs[idx];
    Outcome& out = outcomes[idx];
    ExponentTuple s = sweep_tuple(config, job.n, job.k, job.tuple_index);
    out.entry.n = job.n;
    out.entry.k = job.k;
    out.entry.s = s.str();
    try {
      SumSpec spec(config.f, s, job.n, config.mode);
      Certificate cert = certify(ctx, spec);
      out.entry.kind = cert_kind_name(cert.kind);
      out.entry.method = cert.method;
      if (cert.kind == CertKind::IntegerException)
        out.entry.expected = is_expected_integer_exception(spec);
    } catch (const Unsupported& e) {
      out.status = 1;
      out.message = e.what();
    } catch (const Error& e) {
      out.status = 2;
      out.message = e.what();
    }
  };

  unsigned threads = std::max(1u, config.threads);
  if (threads <= 1 || jobs.size() < 2) {
    for (size_t i = 0; i < jobs.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) work(i);
      });
    for (auto& th : pool) th.join();
  }

  SweepResult result;
  result.total = jobs.size();
  for (size_t i = 0; i < jobs.size(); ++i) {
    const Outcome& out = outcomes[i];
    if (out.status == 1) {
      ++result.unsupported;
      if (result.errors.size() < 20) result.errors.push_back(out.message);
      continue;
    }
    if (out.status == 2) {
      result.errors.push_back(out.message);
      continue;
    }
    ++result.kind_counts[out.entry.kind];
    ++result.method_counts[out.entry.method];
    if (out.entry.kind == cert_kind_name(CertKind::IntegerException))
      result.integer_cases.push_back(out.entry);
  }
  for (uint64_t n = config.n_lo; n <= config.n_hi; ++n) {
    uint64_t k_hi = config.k_hi == 0 ? n : std::min(config.k_hi, n);
    for (uint64_t k = config.k_lo; k <= k_hi; ++k)
      for (unsigned t = 0; t < tuples; ++t) {
        ExponentTuple s = sweep_tuple(config, n, k, t);
        try {
          SumSpec spec(config.f, s, n, config.mode);
          if (is_expected_integer_exception(spec)) ++result.expected_integer_cases;
        } catch (const Error&) {
        }
      }
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace mrs
