#pragma once

#include <cstdint>

#include "ttr/graph.hpp"

namespace ttr {

struct McEstimate {
  double p = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  double half_width = 0.0;  // 95% interval, Wilson score; 0 only when p is 0 or 1
};

// Crude Monte Carlo: sample each edge alive with probability p, count trials
// where the three targets end up connected. Reproducible for a fixed seed.
McEstimate mc_reliability(const LabeledGraph& g, double p, std::uint64_t samples,
                          std::uint64_t seed);

inline const char* mc_rng_name() { return "mt19937_64"; }

}  // namespace ttr
