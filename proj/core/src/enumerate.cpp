#include "ttr/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "canonical_detail.hpp"
#include "ttr/bigint.hpp"
#include "ttr/errors.hpp"

namespace ttr {

std::vector<GnmClass> enumerate_gnm(int n, int m, const EnumerateOptions& opt) {
  if (n < 3) throw std::invalid_argument("enumerate_gnm needs n >= 3");
  if (n > 11) throw budget_error("enumerate_gnm guarded to n <= 11 (canonicalization)");
  const int slots = num_slots(n);
  if (m < 0 || m > slots) throw std::invalid_argument("edge count out of range for K_n");
  const int l = slots - m;
  const BigInt combos = binomial(slots, l);
  if (combos > BigInt(opt.budget))
    throw budget_error("enumerate_gnm: C(" + std::to_string(slots) + "," + std::to_string(l) +
                       ") = " + to_decimal(combos) + " exceeds budget " +
                       std::to_string(opt.budget));

  const auto& maps = detail::target_stabilizing_slot_maps(n);
  std::unordered_map<std::uint64_t, std::uint64_t> orbit_count;  // canonical deleted mask

  // Walk all l-subsets of edge slots (complement representation).
  std::uint64_t mask = l == 0 ? 0 : (std::uint64_t{1} << l) - 1;
  const std::uint64_t limit = slots == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << slots);
  while (true) {
    std::uint64_t best = mask;
    for (const auto& mp : maps) {
      std::uint64_t im = detail::apply_slot_map(mask, mp);
      if (im < best) best = im;
    }
    ++orbit_count[best];
    if (l == 0) break;
    // Gosper's hack: next subset of the same size.
    std::uint64_t c = mask & -mask;
    std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
    if (mask >= limit) break;
  }

  std::vector<GnmClass> out;
  out.reserve(orbit_count.size());
  const std::uint64_t full = slots == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << slots) - 1;
  for (const auto& [dmask, orbit] : orbit_count) {
    std::uint64_t gmask = full & ~dmask;
    std::vector<Edge> es;
    for (std::uint64_t g = gmask; g;) {
      int s = std::countr_zero(g);
      g &= g - 1;
      es.push_back(slot_edge(n, s));
    }
    LabeledGraph graph(n, std::move(es));
    CanonicalKey key = canonical_key(graph);
    out.push_back(GnmClass{std::move(graph), std::move(key), orbit});
  }
  std::sort(out.begin(), out.end(),
            [](const GnmClass& a, const GnmClass& b) { return a.key < b.key; });
  return out;
}

}  // namespace ttr
