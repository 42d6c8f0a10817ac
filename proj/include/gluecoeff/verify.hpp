#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gluecoeff/theta.hpp"

namespace gluecoeff {

struct VerifyConfig {
  std::optional<Mult> max_M;  // when set, caps every suite's M range
  int max_N = 6;
  std::uint64_t seed = 20240611;
  int threads = 0;  // 0: GLUECOEFF_THREADS, else hardware concurrency
  std::vector<std::pair<Mult, Mult>> extra_thetas;
  std::uint64_t node_cap = 20'000'000;
};

struct SuiteResult {
  std::string name;
  std::string title;
  bool pass = true;
  std::uint64_t cases = 0;
  std::string counterexample;
  std::string note;
};

struct SuiteInfo {
  std::string name;
  std::string title;
};

const std::vector<SuiteInfo>& suites();
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);

// count values p/q with q = guard+1, guard+2, ... and p drawn from the seed,
// then the extras that pass the guard.
std::vector<Theta> theta_sweep(int count, Mult guard, std::uint64_t seed,
                               const std::vector<std::pair<Mult, Mult>>& extras = {});

int worker_count(int requested);

// Independent count for c_hyperbolic: value-preserving bijections between the
// two sides times the product of the plus-side multiplicities, gated by the
// parity and distinctness conditions.
BigInt hyperbolic_matching_count(bool positive, const MultList& plus, const MultList& minus);

}  // namespace gluecoeff
