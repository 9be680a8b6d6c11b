#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spl/io.hpp"
#include "spl/spectral.hpp"

namespace spl {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckRecord {
  int instance = 0;
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  Json detail;
};

struct SuiteOptions {
  Tolerances tol;
  int vertex_cap = kDefaultVertexCap;
  int subset_cap = 20;
  double jitter = 0.0;  // relative weight jitter, 0 disables
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<CheckRecord> checks;  // sorted by instance, then run order

  int passes() const;
  int failures() const;
  int skips() const;
  bool passed() const { return failures() == 0; }
  /// Checks named `check` only.
  std::vector<const CheckRecord*> named(const std::string& check) const;
  Json to_json() const;
};

/// courant, interlacing, shift, correspondence, morse, tree-unique,
/// lower-bound, homology, ghost.
const std::vector<std::string>& suite_names();

/// Runs `count` seeded instances of a suite; instance k draws from
/// derive_seed(seed, k). Throws InvalidInput for an unknown suite.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count,
                      const SuiteOptions& opts = {});

}  // namespace spl
