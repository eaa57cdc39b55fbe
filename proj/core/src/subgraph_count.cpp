#include "ttr/subgraph_count.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttr {

const char* pattern_name(Pattern p) {
  switch (p) {
    case Pattern::kP3: return "P3";
    case Pattern::kP4: return "P4";
    case Pattern::kK3: return "K3";
    case Pattern::kK13: return "K13";
  }
  return "?";
}

Pattern pattern_from_name(std::string_view s) {
  if (s == "P3") return Pattern::kP3;
  if (s == "P4") return Pattern::kP4;
  if (s == "K3") return Pattern::kK3;
  if (s == "K13") return Pattern::kK13;
  throw std::invalid_argument("unknown pattern: " + std::string(s));
}

std::int64_t count_nontarget_subgraphs(const LabeledGraph& g, Pattern p) {
  const int n = g.num_vertices();
  const std::uint64_t inner =
      n == 64 ? ~std::uint64_t{7} : ((std::uint64_t{1} << n) - 1) & ~std::uint64_t{7};
  std::vector<std::uint64_t> adj(n, 0);
  std::vector<std::int64_t> deg(n, 0);
  for (int v = 3; v < n; ++v) {
    adj[v] = g.adjacency_mask(v) & inner;
    deg[v] = std::popcount(adj[v]);
  }
  // Each triangle u < v < w is counted once, at its edge (u,v).
  std::int64_t triangles = 0;
  for (const auto& [u, v] : g.edges()) {
    if (u < 3 || v >= 63) continue;
    triangles += std::popcount(adj[u] & adj[v] & (~std::uint64_t{0} << (v + 1)));
  }
  switch (p) {
    case Pattern::kK3:
      return triangles;
    case Pattern::kP3: {
      std::int64_t total = 0;
      for (int v = 3; v < n; ++v) total += deg[v] * (deg[v] - 1) / 2;
      return total;
    }
    case Pattern::kK13: {
      std::int64_t total = 0;
      for (int v = 3; v < n; ++v)
        total += deg[v] * (deg[v] - 1) * (deg[v] - 2) / 6;
      return total;
    }
    case Pattern::kP4: {
      std::int64_t total = 0;
      for (const auto& [u, v] : g.edges())
        if (u >= 3) total += (deg[u] - 1) * (deg[v] - 1);
      return total - 3 * triangles;
    }
  }
  throw std::invalid_argument("unknown pattern");
}

}  // namespace ttr
