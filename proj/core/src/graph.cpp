#include "ttr/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ttr {

Edge make_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("edge endpoints must differ: " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

LabeledGraph::LabeledGraph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 3) throw std::invalid_argument("graph needs at least the 3 target vertices");
  if (n_ > 64) throw std::invalid_argument("vertex count above bitmask capacity (64)");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge rejected");
  adj_.assign(n_, 0);
  for (const auto& [u, v] : edges_) {
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
}

LabeledGraph LabeledGraph::complete(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return LabeledGraph(n, std::move(es));
}

LabeledGraph LabeledGraph::from_complete_minus(int n, const std::vector<Edge>& deleted) {
  if (n < 3 || n > 64) throw std::invalid_argument("vertex count out of range");
  std::vector<Edge> del;
  del.reserve(deleted.size());
  for (const auto& [u, v] : deleted) {
    Edge e = make_edge(u, v);
    if (e.first < 0 || e.second >= n) throw std::invalid_argument("deleted edge out of range");
    del.push_back(e);
  }
  std::sort(del.begin(), del.end());
  if (std::adjacent_find(del.begin(), del.end()) != del.end())
    throw std::invalid_argument("duplicate deleted edge rejected");
  std::vector<Edge> es;
  auto it = del.begin();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Edge e{u, v};
      if (it != del.end() && *it == e)
        ++it;
      else
        es.push_back(e);
    }
  return LabeledGraph(n, std::move(es));
}

bool LabeledGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return (adj_[u] >> v) & 1;
}

int LabeledGraph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return std::popcount(adj_[v]);
}

std::uint64_t LabeledGraph::adjacency_mask(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return adj_[v];
}

std::vector<Edge> LabeledGraph::deleted_edges() const {
  std::vector<Edge> del;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) del.emplace_back(u, v);
  return del;
}

std::vector<int> LabeledGraph::complement_deleted_degrees() const {
  std::vector<int> d;
  for (int v = 3; v < n_; ++v) d.push_back(n_ - 1 - degree(v));
  return d;
}

bool LabeledGraph::targets_connected() const {
  std::uint64_t seen = 1;  // BFS from r over adjacency masks
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj_[v] & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return (seen & 0b110) == 0b110;
}

LabeledGraph complement(const LabeledGraph& g) {
  return LabeledGraph(g.num_vertices(), g.deleted_edges());
}

int num_slots(int n) { return n * (n - 1) / 2; }

int edge_slot(int n, int u, int v) {
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Edge slot_edge(int n, int slot) {
  int u = 0;
  int row = n - 1;
  while (slot >= row) {
    slot -= row;
    --row;
    ++u;
  }
  return {u, u + 1 + slot};
}

std::uint64_t edge_mask(const LabeledGraph& g) {
  int n = g.num_vertices();
  if (num_slots(n) > 64) throw std::invalid_argument("edge mask needs C(n,2) <= 64");
  std::uint64_t mask = 0;
  for (const auto& [u, v] : g.edges()) mask |= std::uint64_t{1} << edge_slot(n, u, v);
  return mask;
}

}  // namespace ttr
