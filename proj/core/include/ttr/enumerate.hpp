#pragma once

#include <cstdint>
#include <vector>

#include "ttr/canonical.hpp"
#include "ttr/graph.hpp"

namespace ttr {

// One isomorphism class of graphs with n vertices and m edges (targets
// fixed as a set). orbit_size counts the labeled graphs in the class, so
// the orbit sizes over all classes sum to C(C(n,2), C(n,2)-m).
struct GnmClass {
  LabeledGraph graph;
  CanonicalKey key;
  std::uint64_t orbit_size = 0;
};

struct EnumerateOptions {
  std::uint64_t budget = 1'000'000;  // max complement combinations walked
};

// All classes of n-vertex m-edge graphs, enumerated over complements of K_n
// and deduplicated by canonical key; sorted by key. Throws budget_error when
// C(C(n,2), l) exceeds the budget, std::invalid_argument on bad (n,m).
std::vector<GnmClass> enumerate_gnm(int n, int m, const EnumerateOptions& opt = {});

}  // namespace ttr
