#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ttr/graph.hpp"

namespace ttr {

// Smallest number of edges whose removal leaves r, s, t not all in one
// component. Equals the minimum of the three pairwise min cuts.
int lambda_rst(const LabeledGraph& g);

enum class CutsetMethod {
  kPartition,  // connected bipartitions with the targets split; needs connected G
  kSweep,      // definitional subset sweep; m <= 20
};

// Removing a minimal cutset leaves exactly two components. Each cutset is
// annotated (k, kprime), minimized lexicographically over the six ways of
// naming the targets: the component holding r has k+1 vertices; kprime is 0
// when s sits with r, else the size of s's component.
struct CutsetGroup {
  int size = 0, k = 0, kprime = 0;
  std::uint64_t count = 0;
  friend bool operator==(const CutsetGroup&, const CutsetGroup&) = default;
};

struct CutsetProfile {
  int lambda = 0;
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> counts_by_size;
  std::map<int, std::vector<Edge>> witness_by_size;  // lex-least cutset of each size
  std::vector<CutsetGroup> groups;                   // sorted by (size, k, kprime)
};

CutsetProfile enumerate_minimal_cutsets(const LabeledGraph& g,
                                        CutsetMethod method = CutsetMethod::kPartition);

std::string cutset_profile_to_json(const CutsetProfile& profile);

// Every minimal cutset of a graph missing l edges from K_n must satisfy
//   n-1-l+k(n-k-2) <= size <= n-1+k(n-k-2)+kprime*(n-k-kprime-1).
// at_lower counts cutsets that meet the lower bound exactly.
struct CutsetBoundsReport {
  std::uint64_t checked = 0, violations = 0, at_lower = 0;
  bool all_hold() const { return violations == 0; }
};
CutsetBoundsReport cutset_size_bounds_report(const LabeledGraph& g,
                                             const CutsetProfile& profile);

// Layer structure of the two smallest sizes: the smallest cutsets must be
// exactly the three target stars, and every next-smallest minimal cutset
// must leave an order-2 component containing a target.
struct CutsetStructureReport {
  bool smallest_are_target_stars = false;
  bool next_smallest_leaves_order2 = false;
  int smallest_size = 0, next_size = 0;
};
CutsetStructureReport cutset_structure_report(const LabeledGraph& g,
                                              const CutsetProfile& profile);

}  // namespace ttr
