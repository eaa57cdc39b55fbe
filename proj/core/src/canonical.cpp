#include "ttr/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ttr/errors.hpp"

namespace ttr {

const std::vector<std::vector<int>>& target_stabilizing_permutations(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 3 || n > 11) throw budget_error("target-stabilizing group walk guarded to 3 <= n <= 11");
  std::vector<std::vector<int>> group;
  std::vector<int> targets{0, 1, 2};
  std::vector<int> rest(n - 3);
  std::iota(rest.begin(), rest.end(), 3);
  do {
    std::vector<int> r = rest;
    std::sort(r.begin(), r.end());
    do {
      std::vector<int> p(targets.begin(), targets.end());
      p.insert(p.end(), r.begin(), r.end());
      group.push_back(std::move(p));
    } while (std::next_permutation(r.begin(), r.end()));
  } while (std::next_permutation(targets.begin(), targets.end()));
  return cache.emplace(n, std::move(group)).first->second;
}

LabeledGraph apply_permutation(const LabeledGraph& g, const std::vector<int>& p) {
  std::vector<Edge> es;
  es.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) es.push_back(make_edge(p[u], p[v]));
  return LabeledGraph(g.num_vertices(), std::move(es));
}

namespace detail {

bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  // Lexicographic order on equal-size sorted edge lists: the list holding
  // the lowest differing slot is smaller.
  std::uint64_t x = a ^ b;
  if (!x) return false;
  return a & (x & -x);
}

std::vector<int> slot_map(int n, const std::vector<int>& p) {
  std::vector<int> m(num_slots(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      auto [a, b] = make_edge(p[u], p[v]);
      m[edge_slot(n, u, v)] = edge_slot(n, a, b);
    }
  return m;
}

// One slot-image table per group element, cached per n.
const std::vector<std::vector<int>>& target_stabilizing_slot_maps(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> cache;
  const auto& group = target_stabilizing_permutations(n);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> maps;
  maps.reserve(group.size());
  for (const auto& p : group) maps.push_back(slot_map(n, p));
  return cache.emplace(n, std::move(maps)).first->second;
}

const std::vector<std::vector<int>>& full_slot_maps(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> cache;
  if (n < 1 || n > 8) throw budget_error("full permutation table guarded to n <= 8");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> maps;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    maps.push_back(slot_map(n, p));
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(n, std::move(maps)).first->second;
}

std::uint64_t apply_slot_map(std::uint64_t mask, const std::vector<int>& m) {
  std::uint64_t out = 0;
  while (mask) {
    int s = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint64_t{1} << m[s];
  }
  return out;
}

std::string key_bytes(int n, std::uint64_t mask) {
  std::ostringstream os;
  os << "n=" << n << ";";
  bool first = true;
  while (mask) {
    int s = std::countr_zero(mask);
    mask &= mask - 1;
    auto [u, v] = slot_edge(n, s);
    if (!first) os << ",";
    os << u << "-" << v;
    first = false;
  }
  return os.str();
}

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
  std::uint64_t best = mask;
  for (const auto& m : target_stabilizing_slot_maps(n)) {
    std::uint64_t im = apply_slot_map(mask, m);
    if (mask_lex_less(im, best)) best = im;
  }
  return best;
}

}  // namespace detail

CanonicalKey canonical_key(const LabeledGraph& g) {
  int n = g.num_vertices();
  if (n > 11) throw budget_error("canonical_key guarded to n <= 11");
  return CanonicalKey{detail::key_bytes(n, detail::canonical_mask(n, edge_mask(g)))};
}

bool isomorphic_fixing_targets(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  int n = a.num_vertices();
  if (n > 11) throw budget_error("isomorphism oracle guarded to n <= 11");
  std::uint64_t ma = edge_mask(a), mb = edge_mask(b);
  for (const auto& m : detail::target_stabilizing_slot_maps(n))
    if (detail::apply_slot_map(ma, m) == mb) return true;
  return false;
}

std::string plain_canonical_key(int n, const std::vector<Edge>& edges) {
  if (n < 1 || n > 8) throw budget_error("plain canonicalization guarded to n <= 8");
  std::uint64_t mask = 0;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v >= n || u >= v) throw std::invalid_argument("bad edge for plain key");
    mask |= std::uint64_t{1} << edge_slot(n, u, v);
  }
  std::uint64_t best = mask;
  for (const auto& m : detail::full_slot_maps(n)) {
    std::uint64_t im = detail::apply_slot_map(mask, m);
    if (detail::mask_lex_less(im, best)) best = im;
  }
  return detail::key_bytes(n, best);
}

}  // namespace ttr
