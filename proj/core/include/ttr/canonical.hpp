#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ttr/graph.hpp"

namespace ttr {

// Canonical form of a graph under relabelings that keep {r,s,t} = {0,1,2}
// as a set (targets may permute among themselves, non-targets freely).
// The key is the lexicographically smallest sorted edge list over the
// 6*(n-3)! group elements, rendered as opaque bytes. Guarded to n <= 11
// (the brute-force group walk; edge masks also cap there).
struct CanonicalKey {
  std::string bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const LabeledGraph& g);

// The group itself, each element as an image array p[v].
const std::vector<std::vector<int>>& target_stabilizing_permutations(int n);

LabeledGraph apply_permutation(const LabeledGraph& g, const std::vector<int>& p);

// True iff some target-stabilizing permutation maps a onto b. Brute force;
// same guard as canonical_key. Used as the definitional oracle in tests.
bool isomorphic_fixing_targets(const LabeledGraph& a, const LabeledGraph& b);

// Canonical form under the full symmetric group (no targets); n <= 8.
// Used by the no-target subgraph-count maximizer search.
std::string plain_canonical_key(int n, const std::vector<Edge>& edges);

}  // namespace ttr
