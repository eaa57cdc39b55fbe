#include "ttr/cutsets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "ttr/errors.hpp"

namespace ttr {

namespace {

int pair_min_cut(const LabeledGraph& g, int s, int t) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) cap[u][v] = cap[v][u] = 1;
  int flow = 0;
  for (;;) {
    std::vector<int> prev(n, -1);
    prev[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && prev[t] == -1) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < n; ++y)
        if (cap[x][y] > 0 && prev[y] == -1) {
          prev[y] = x;
          q.push(y);
        }
    }
    if (prev[t] == -1) return flow;
    for (int y = t; y != s; y = prev[y]) {
      --cap[prev[y]][y];
      ++cap[y][prev[y]];
    }
    ++flow;
  }
}

// Vertices reachable from start inside `allowed` (a vertex bitmask).
std::uint64_t reach(const LabeledGraph& g, std::uint64_t allowed, int start) {
  std::uint64_t seen = 1ull << start, frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.adjacency_mask(v) & allowed;
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool side_connected(const LabeledGraph& g, std::uint64_t side) {
  if (side == 0) return false;
  return reach(g, side, std::countr_zero(side)) == side;
}

// (k, kprime) minimized over the six target namings; comp[i] is the vertex
// mask of the component holding target i.
std::pair<int, int> annotate(const std::array<std::uint64_t, 3>& comp) {
  static constexpr int kPerm[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  std::pair<int, int> best{1 << 30, 0};
  for (const auto& rs : kPerm) {
    const int r = rs[0], s = rs[1];
    const int k = std::popcount(comp[r]) - 1;
    const int kprime = (comp[s] == comp[r]) ? 0 : std::popcount(comp[s]);
    best = std::min(best, {k, kprime});
  }
  return best;
}

struct RawCut {
  std::vector<Edge> edges;            // sorted
  std::array<std::uint64_t, 3> comp;  // component mask per target
};

CutsetProfile assemble(std::vector<RawCut>&& cuts) {
  CutsetProfile out;
  std::map<std::array<int, 3>, std::uint64_t> grouped;
  for (auto& rc : cuts) {
    const int sz = static_cast<int>(rc.edges.size());
    ++out.counts_by_size[sz];
    auto [k, kp] = annotate(rc.comp);
    ++grouped[{sz, k, kp}];
    auto it = out.witness_by_size.find(sz);
    if (it == out.witness_by_size.end())
      out.witness_by_size.emplace(sz, std::move(rc.edges));
    else if (rc.edges < it->second)
      it->second = std::move(rc.edges);
  }
  out.total = cuts.size();
  out.lambda = out.counts_by_size.empty() ? 0 : out.counts_by_size.begin()->first;
  for (const auto& [key, count] : grouped)
    out.groups.push_back({key[0], key[1], key[2], count});
  return out;
}

std::vector<RawCut> cuts_by_partition(const LabeledGraph& g) {
  const int n = g.num_vertices();
  if (n > 24) throw budget_error("enumerate_minimal_cutsets: partition method needs n <= 24");
  const std::uint64_t all = (n == 64) ? ~0ull : (1ull << n) - 1;
  if (reach(g, all, 0) != all)
    throw std::invalid_argument("enumerate_minimal_cutsets: graph must be connected");
  std::vector<RawCut> cuts;
  // A runs over vertex sets containing 0; B = complement must keep a target.
  for (std::uint64_t bits = 0; bits < (1ull << (n - 1)); ++bits) {
    const std::uint64_t a = (bits << 1) | 1;
    const std::uint64_t b = all & ~a;
    if ((b & 0b110) == 0) continue;
    if (!side_connected(g, a) || !side_connected(g, b)) continue;
    RawCut rc;
    for (const auto& e : g.edges())
      if (((a >> e.first) & 1) != ((a >> e.second) & 1)) rc.edges.push_back(e);
    for (int tgt = 0; tgt < 3; ++tgt) rc.comp[tgt] = (a >> tgt & 1) ? a : b;
    cuts.push_back(std::move(rc));
  }
  return cuts;
}

std::vector<RawCut> cuts_by_sweep(const LabeledGraph& g) {
  const int m = g.num_edges();
  const int n = g.num_vertices();
  if (m > 20) throw budget_error("enumerate_minimal_cutsets: sweep method needs m <= 20");
  const auto& es = g.edges();
  // Components of the graph with the edges in `removed` deleted; returns the
  // mask of each target's component, or nullopt-equivalent via joined flag.
  auto target_comps = [&](std::uint64_t removed, std::array<std::uint64_t, 3>* comp) {
    std::vector<std::uint64_t> adj(n, 0);
    for (int k = 0; k < m; ++k) {
      if (removed >> k & 1) continue;
      adj[es[k].first] |= 1ull << es[k].second;
      adj[es[k].second] |= 1ull << es[k].first;
    }
    for (int tgt = 0; tgt < 3; ++tgt) {
      std::uint64_t seen = 1ull << tgt, frontier = seen;
      while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
          int v = std::countr_zero(f);
          f &= f - 1;
          next |= adj[v];
        }
        frontier = next & ~seen;
        seen |= frontier;
      }
      (*comp)[tgt] = seen;
    }
    return !(comp->at(0) == comp->at(1) && comp->at(1) == comp->at(2));
  };
  std::vector<RawCut> cuts;
  std::array<std::uint64_t, 3> comp, scratch;
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    if (!target_comps(mask, &comp)) continue;
    bool minimal = true;
    for (std::uint64_t rest = mask; rest && minimal;) {
      const std::uint64_t bit = rest & (~rest + 1);
      rest &= rest - 1;
      if (target_comps(mask & ~bit, &scratch)) minimal = false;
    }
    if (!minimal) continue;
    RawCut rc;
    for (std::uint64_t rest = mask; rest;) {
      rc.edges.push_back(es[std::countr_zero(rest)]);
      rest &= rest - 1;
    }
    rc.comp = comp;
    cuts.push_back(std::move(rc));
  }
  return cuts;
}

}  // namespace

int lambda_rst(const LabeledGraph& g) {
  return std::min(
      {pair_min_cut(g, 0, 1), pair_min_cut(g, 0, 2), pair_min_cut(g, 1, 2)});
}

CutsetProfile enumerate_minimal_cutsets(const LabeledGraph& g, CutsetMethod method) {
  auto cuts =
      method == CutsetMethod::kPartition ? cuts_by_partition(g) : cuts_by_sweep(g);
  return assemble(std::move(cuts));
}

std::string cutset_profile_to_json(const CutsetProfile& profile) {
  std::ostringstream os;
  os << "{\"lambda\":" << profile.lambda << ",\"total\":" << profile.total;
  os << ",\"counts\":{";
  bool first = true;
  for (const auto& [sz, cnt] : profile.counts_by_size) {
    os << (first ? "" : ",") << '"' << sz << "\":" << cnt;
    first = false;
  }
  os << "},\"witnesses\":{";
  first = true;
  for (const auto& [sz, edges] : profile.witness_by_size) {
    os << (first ? "" : ",") << '"' << sz << "\":[";
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) os << ',';
      os << '[' << edges[i].first << ',' << edges[i].second << ']';
    }
    os << ']';
    first = false;
  }
  os << "},\"groups\":[";
  for (std::size_t i = 0; i < profile.groups.size(); ++i) {
    const auto& grp = profile.groups[i];
    if (i) os << ',';
    os << "{\"size\":" << grp.size << ",\"k\":" << grp.k << ",\"kprime\":" << grp.kprime
       << ",\"count\":" << grp.count << '}';
  }
  os << "]}";
  return os.str();
}

CutsetBoundsReport cutset_size_bounds_report(const LabeledGraph& g,
                                             const CutsetProfile& profile) {
  const int n = g.num_vertices();
  const int l = num_slots(n) - g.num_edges();
  CutsetBoundsReport rep;
  for (const auto& grp : profile.groups) {
    const long core = static_cast<long>(grp.k) * (n - grp.k - 2);
    const long lo = n - 1 - l + core;
    const long hi = n - 1 + core + static_cast<long>(grp.kprime) * (n - grp.k - grp.kprime - 1);
    rep.checked += grp.count;
    if (grp.size < lo || grp.size > hi) rep.violations += grp.count;
    if (grp.size == lo) rep.at_lower += grp.count;
  }
  return rep;
}

CutsetStructureReport cutset_structure_report(const LabeledGraph& g,
                                              const CutsetProfile& profile) {
  CutsetStructureReport rep;
  auto it = profile.counts_by_size.begin();
  if (it == profile.counts_by_size.end()) return rep;
  rep.smallest_size = it->first;
  // k = 0 means the component holding some target is that target alone, so
  // the cutset is exactly that target's star.
  bool stars = it->second == 3;
  for (int tgt = 0; tgt < 3; ++tgt)
    if (g.degree(tgt) != rep.smallest_size) stars = false;
  for (const auto& grp : profile.groups)
    if (grp.size == rep.smallest_size && grp.k != 0) stars = false;
  rep.smallest_are_target_stars = stars;
  if (++it != profile.counts_by_size.end()) {
    rep.next_size = it->first;
    bool order2 = true;
    for (const auto& grp : profile.groups)
      if (grp.size == rep.next_size && grp.k != 1) order2 = false;
    rep.next_smallest_leaves_order2 = order2;
  }
  return rep;
}

}  // namespace ttr
