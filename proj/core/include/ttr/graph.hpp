#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace ttr {

// Undirected simple edge, always stored as (min,max).
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);  // orders endpoints; throws on u == v

// Vertex-labeled simple graph on {0..n-1} with the three targets fixed at
// vertices 0, 1, 2 (called r, s, t throughout). Edge list is kept strictly
// sorted; adjacency is mirrored in per-vertex bitmasks (n <= 64).
class LabeledGraph {
 public:
  LabeledGraph(int num_vertices, std::vector<Edge> edges);

  static LabeledGraph complete(int n);
  // K_n minus a set of distinct deleted edges.
  static LabeledGraph from_complete_minus(int n, const std::vector<Edge>& deleted);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::uint64_t adjacency_mask(int v) const;

  // Edges of K_n absent from this graph, sorted.
  std::vector<Edge> deleted_edges() const;
  // Deleted degree (n-1) - degree(v) for each non-target v = 3..n-1.
  std::vector<int> complement_deleted_degrees() const;

  bool targets_connected() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

// K_n minus E(G) on the same vertex set.
LabeledGraph complement(const LabeledGraph& g);

// Dense rank of edge slot (u,v), u < v, in the row-major upper triangle of
// K_n; inverse mapping below. Used for edge-set bitmasks.
int edge_slot(int n, int u, int v);
Edge slot_edge(int n, int slot);
int num_slots(int n);  // C(n,2)

// Edge-set bitmask over slots; requires C(n,2) <= 64 (n <= 11).
std::uint64_t edge_mask(const LabeledGraph& g);

}  // namespace ttr
