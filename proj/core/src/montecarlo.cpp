#include "ttr/montecarlo.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ttr {

namespace {

// Uniform in [0,1) with 53 random bits, independent of library distribution
// implementations so results are stable across standard libraries.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool targets_joined(const LabeledGraph& g, const std::vector<char>& alive) {
  const int n = g.num_vertices();
  std::vector<std::uint64_t> adj(n, 0);
  const auto& es = g.edges();
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (!alive[k]) continue;
    adj[es[k].first] |= 1ull << es[k].second;
    adj[es[k].second] |= 1ull << es[k].first;
  }
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
    if ((seen & 0b110) == 0b110) return true;
  }
  return false;
}

}  // namespace

McEstimate mc_reliability(const LabeledGraph& g, double p, std::uint64_t samples,
                          std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mc_reliability: p outside [0,1]");
  if (samples == 0) throw std::invalid_argument("mc_reliability: samples must be positive");
  McEstimate out;
  out.p = p;
  out.samples = samples;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  const std::size_t m = g.edges().size();
  std::vector<char> alive(m);
  std::uint64_t hits = 0;
  for (std::uint64_t trial = 0; trial < samples; ++trial) {
    for (std::size_t k = 0; k < m; ++k) alive[k] = next_unit(rng) < p;
    if (targets_joined(g, alive)) ++hits;
  }
  out.successes = hits;
  out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  // Wilson score interval, widened so it stays centered on the raw estimate.
  // The plain Wald width collapses to zero whenever every trial agrees, which
  // happens routinely on dense graphs at large p. At p = 0 or 1 the outcome
  // really is deterministic and the width is honestly zero.
  if (p == 0.0 || p == 1.0) {
    out.half_width = 0.0;
  } else {
    const double z = 1.96, n = static_cast<double>(samples), phat = out.estimate;
    const double denom = 1.0 + z * z / n;
    const double center = (phat + z * z / (2.0 * n)) / denom;
    const double spread =
        z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
    out.half_width = std::max(phat - (center - spread), (center + spread) - phat);
  }
  return out;
}

}  // namespace ttr
