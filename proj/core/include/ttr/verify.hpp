#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ttr/coeffs.hpp"

namespace ttr {

class CoeffCache;

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct SuiteReport {
  std::string suite;
  std::vector<ClaimResult> claims;
  bool pass() const;
};

struct VerifyOptions {
  std::optional<int> n;  // narrow a multi-case suite to one vertex count
  std::optional<int> l;  // narrow to one deletion / edge-budget value
  std::uint64_t budget = 2'000'000;
  Engine engine = Engine::kAuto;
  CoeffCache* cache = nullptr;
};

const std::vector<std::string>& verify_suite_names();

// Runs one named claim suite; throws std::invalid_argument for an unknown
// suite or a narrowing that matches no case.
SuiteReport run_verify_suite(const std::string& suite, const VerifyOptions& opts = {});

// Engine agreement, Monte Carlo interval coverage, and coefficient
// inequalities over seeded random graphs with n <= 7.
SuiteReport run_cross_validation(std::uint64_t seed = 20260815, int num_graphs = 100,
                                 std::uint64_t mc_samples = 100'000);

}  // namespace ttr
