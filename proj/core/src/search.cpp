#include "ttr/search.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "canonical_detail.hpp"
#include "ttr/cache.hpp"
#include "ttr/enumerate.hpp"
#include "ttr/errors.hpp"

namespace ttr {

namespace {

CoeffVector coeffs_for(const GnmClass& cls, const SearchOptions& opts) {
  if (opts.cache)
    if (auto hit = opts.cache->load(cls.key, opts.engine)) return *hit;
  CoeffVector cv = coeffs(cls.graph, opts.engine);
  if (opts.cache) opts.cache->store(cls.key, opts.engine, cv);
  return cv;
}

EndOrder order_for(End end, const CoeffVector& a, const CoeffVector& b) {
  return end == End::kZero ? near_zero_order(a, b) : near_one_order(a, b);
}

// Index of the end-order argmax plus a strict-uniqueness flag.
std::pair<std::size_t, bool> argmax(End end, const std::vector<CoeffVector>& cv) {
  std::size_t best = 0;
  bool unique = true;
  for (std::size_t i = 1; i < cv.size(); ++i) {
    const EndOrder ord = order_for(end, cv[i], cv[best]);
    if (ord.winner == Winner::kFirst) {
      best = i;
      unique = true;
    } else if (ord.winner == Winner::kEqual) {
      unique = false;
    }
  }
  return {best, unique};
}

}  // namespace

LocalOptResult find_local_opt(int n, int m, End end, const SearchOptions& opts) {
  auto classes = enumerate_gnm(n, m, {opts.budget});
  if (classes.empty())
    throw std::invalid_argument("find_local_opt: no graphs with these parameters");
  std::vector<CoeffVector> cv;
  cv.reserve(classes.size());
  for (const auto& cls : classes) cv.push_back(coeffs_for(cls, opts));
  auto [best, unique] = argmax(end, cv);
  return {end,
          n,
          m,
          classes.size(),
          unique,
          classes[best].graph,
          classes[best].key,
          cv[best]};
}

UmrgResult find_umrg(int n, int m, const SearchOptions& opts) {
  auto classes = enumerate_gnm(n, m, {opts.budget});
  if (classes.empty()) throw std::invalid_argument("find_umrg: no graphs with these parameters");
  std::vector<CoeffVector> cv;
  cv.reserve(classes.size());
  for (const auto& cls : classes) cv.push_back(coeffs_for(cls, opts));
  const std::size_t w0 = argmax(End::kZero, cv).first;
  const std::size_t w1 = argmax(End::kOne, cv).first;
  UmrgResult res;
  res.num_classes = classes.size();
  res.best = classes[w0].key;
  // A uniform winner must win both end orders, so differing end winners
  // cross each other and certify that none exists.
  if (near_zero_order(cv[w0], cv[w1]).winner != Winner::kEqual) {
    auto verdict = classify_pair(cv[w0], cv[w1]);
    if (verdict.relation == Relation::kCrossing) {
      res.status = UmrgStatus::kNone;
      res.crossing_pair = {classes[w0].key, classes[w1].key};
      res.crossing = verdict.crossings.front();
      return res;
    }
  }
  bool all_dominated = true;
  for (std::size_t i = 0; i < cv.size() && res.status != UmrgStatus::kNone; ++i) {
    if (i == w0) continue;
    const auto verdict = classify_pair(cv[w0], cv[i]);
    switch (verdict.relation) {
      case Relation::kFirstDominates:
      case Relation::kEqual:  // tie everywhere still leaves w0 weakly best
        break;
      case Relation::kCrossing:
        res.status = UmrgStatus::kNone;
        res.crossing_pair = {classes[w0].key, classes[i].key};
        res.crossing = verdict.crossings.front();
        break;
      default:
        all_dominated = false;
        break;
    }
  }
  if (res.status != UmrgStatus::kNone && all_dominated) res.status = UmrgStatus::kUniformBest;
  return res;
}

PathCountSearch max_p3_search(int n, int m, std::uint64_t budget) {
  if (n < 1 || n > 7) throw budget_error("max_p3_search guarded to n <= 7");
  const int slots = num_slots(n);
  if (m < 0 || m > slots) throw std::invalid_argument("max_p3_search: bad edge count");
  if (binomial(slots, m) > BigInt(budget))
    throw budget_error("max_p3_search: combination count exceeds budget");
  const auto& maps = detail::full_slot_maps(n);
  auto canon = [&](std::uint64_t mask) {
    std::uint64_t best = mask;
    for (const auto& mp : maps) best = std::min(best, detail::apply_slot_map(mask, mp));
    return best;
  };
  std::uint64_t star = 0, triangle = 0;
  if (m + 1 <= n)
    for (int i = 1; i <= m; ++i) star |= std::uint64_t{1} << edge_slot(n, 0, i);
  if (m == 3 && n >= 3)
    triangle = (std::uint64_t{1} << edge_slot(n, 0, 1)) |
               (std::uint64_t{1} << edge_slot(n, 0, 2)) |
               (std::uint64_t{1} << edge_slot(n, 1, 2));
  const std::uint64_t star_c = (m + 1 <= n) ? canon(star) : 0;
  const std::uint64_t tri_c = triangle ? canon(triangle) : 0;

  PathCountSearch out;
  out.n = n;
  out.m = m;
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t set = (m == 0) ? 0 : (1ull << m) - 1;
  const std::uint64_t limit = 1ull << slots;
  bool first_iter = true;
  while (set < limit && (m > 0 || first_iter)) {
    first_iter = false;
    const std::uint64_t c = canon(set);
    if (seen.insert(c).second) {
      std::uint64_t p3 = 0;
      for (int v = 0; v < n; ++v) {
        std::uint64_t d = 0;
        for (std::uint64_t rem = c; rem;) {
          const int s = std::countr_zero(rem);
          rem &= rem - 1;
          const auto [a, b] = slot_edge(n, s);
          if (a == v || b == v) ++d;
        }
        p3 += d * (d - 1) / 2;
      }
      if (p3 > out.max_p3 || out.achievers == 0) {
        out.max_p3 = p3;
        out.achievers = 1;
        out.star_achieves = (m + 1 <= n) && c == star_c;
        out.triangle_achieves = triangle && c == tri_c;
      } else if (p3 == out.max_p3) {
        ++out.achievers;
        out.star_achieves = out.star_achieves || ((m + 1 <= n) && c == star_c);
        out.triangle_achieves = out.triangle_achieves || (triangle && c == tri_c);
      }
    }
    if (m == 0) break;
    const std::uint64_t low = set & (~set + 1), r = set + low;
    set = r | (((set ^ r) >> 2) / low);
  }
  return out;
}

}  // namespace ttr
