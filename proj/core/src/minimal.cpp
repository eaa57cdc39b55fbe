#include "ttr/minimal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "ttr/errors.hpp"

namespace ttr {

namespace {

// True if targets 0,1,2 share a component of the listed edges, ignoring
// edges[skip]. Union-find seeded lazily so no full reset per call.
bool targets_joined(const Edge* es, int cnt, int skip) {
  int parent[64];
  parent[0] = 0;
  parent[1] = 1;
  parent[2] = 2;
  std::uint64_t seeded = 0b111;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k = 0; k < cnt; ++k) {
    if (k == skip) continue;
    auto [u, v] = es[k];
    if (!(seeded >> u & 1)) {
      parent[u] = u;
      seeded |= 1ull << u;
    }
    if (!(seeded >> v & 1)) {
      parent[v] = v;
      seeded |= 1ull << v;
    }
    parent[find(u)] = find(v);
  }
  return find(0) == find(1) && find(1) == find(2);
}

}  // namespace

std::vector<BigInt> minimal_counts_upto(const LabeledGraph& g, int max_size) {
  if (max_size < 0) max_size = 0;
  const int m = g.num_edges();
  if (m > 63) throw budget_error("minimal_counts_upto: needs m <= 63");
  std::vector<BigInt> b(max_size + 1);
  // Minimal connecting sets are trees whose leaves are all targets, so at
  // most n-1 edges.
  const int cap = std::min({max_size, g.num_vertices() - 1, m});
  const auto& es = g.edges();
  std::array<Edge, 64> sub;
  for (int i = 2; i <= cap; ++i) {
    std::uint64_t set = (1ull << i) - 1;
    const std::uint64_t limit = 1ull << m;
    std::uint64_t count = 0;
    while (set < limit) {
      int cnt = 0;
      for (std::uint64_t rem = set; rem; rem &= rem - 1)
        sub[cnt++] = es[std::countr_zero(rem)];
      bool minimal = targets_joined(sub.data(), cnt, -1);
      for (int k = 0; k < cnt && minimal; ++k)
        if (targets_joined(sub.data(), cnt, k)) minimal = false;
      if (minimal) ++count;
      std::uint64_t c = set & (~set + 1), r = set + c;
      set = r | (((set ^ r) >> 2) / c);
    }
    b[i] = count;
  }
  return b;
}

MinimalSplit minimal_split(const LabeledGraph& g) {
  const int m = g.num_edges();
  if (m > 24) throw budget_error("minimal_split: supported up to m = 24 edges");
  MinimalSplit out;
  out.m = m;
  out.b = minimal_counts_upto(g, m);
  CoeffVector nv = coeffs(g);
  out.c.resize(m + 1);
  for (int i = 0; i <= m; ++i) out.c[i] = nv.at(i) - out.b[i];
  return out;
}

N3Decomposition n3_decomposition(const LabeledGraph& g) {
  if (!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2)))
    throw std::invalid_argument("n3_decomposition: target triangle must be present");
  N3Decomposition out;
  out.a = 1;
  out.b = BigInt(3) * (g.num_edges() - 3);
  // c: the kept target edge is xy, the third target z reaches an endpoint
  // through one non-target v. The edge set determines (x,y,z,v,w) uniquely,
  // so plain counting is exact.
  static constexpr int kEdgeThird[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  int c = 0, d = 0;
  for (int v = 3; v < g.num_vertices(); ++v) {
    for (const auto& xyz : kEdgeThird) {
      if (!g.has_edge(xyz[2], v)) continue;
      for (int w : {xyz[0], xyz[1]})
        if (g.has_edge(v, w)) ++c;
    }
    if (g.has_edge(0, v) && g.has_edge(1, v) && g.has_edge(2, v)) ++d;
  }
  out.c = c;
  out.d = d;
  return out;
}

FormulaReport formula_suite(const LabeledGraph& g, Engine engine) {
  const int n = g.num_vertices(), m = g.num_edges();
  for (int t = 0; t < 3; ++t)
    if (g.degree(t) != n - 1)
      throw std::invalid_argument(
          "formula_suite: every target must be adjacent to all other vertices");
  FormulaReport r;
  r.n = n;
  r.m = m;
  // m - 3n + 6 = number of edges joining two non-targets.
  const BigInt excess = BigInt(m) - 3 * n + 6;
  r.b4_formula = 6 * binomial(n - 3, 2) + 18 * excess;
  r.c4_formula = 3 * binomial(m - 3, 2) + (m - 3) + BigInt(n - 3) * (m - 3) +
                 6 * BigInt(n - 3) * (m - 6);
  BigInt sum_deg_choose = 0, sum_deg_sq = 0;
  for (int v = 3; v < n; ++v) {
    const int dv = g.degree(v);
    sum_deg_choose += binomial(dv - 3, 2);
    sum_deg_sq += BigInt(dv - 3) * (dv - 3);
  }
  BigInt sum_del_choose = 0;
  for (int dd : g.complement_deleted_degrees()) sum_del_choose += binomial(dd, 2);
  const int l = n * (n - 1) / 2 - m;  // all deletions are between non-targets here
  r.b5_formulas[0] = 12 * excess * (n - 5) + 24 * sum_deg_choose;
  r.b5_formulas[1] = 12 * sum_deg_sq + 12 * excess * (n - 7);
  r.b5_formulas[2] = 24 * sum_del_choose + 24 * l +
                     12 * BigInt(n - 3) * (n - 4) * (n - 4) - 48 * BigInt(n - 4) * l +
                     12 * excess * (n - 7);
  r.c5_formula = 3 * binomial(m - 3, 3) + binomial(m - 3, 2) +
                 7 * BigInt(n - 3) * binomial(m - 6, 2) + 3 * BigInt(n - 3) * (m - 6) -
                 12 * binomial(n - 3, 2) + 18 * excess * (m - 10) + 6 * excess +
                 6 * BigInt(m - 9) * binomial(n - 3, 2);
  auto b = minimal_counts_upto(g, 5);
  r.b4_enum = b[4];
  r.b5_enum = b[5];
  CoeffVector nv = coeffs(g, engine);
  r.c4_enum = nv.at(4) - b[4];
  r.c5_enum = nv.at(5) - b[5];
  return r;
}

}  // namespace ttr
