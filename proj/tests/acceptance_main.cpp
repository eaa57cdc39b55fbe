// Acceptance gate: eleven timed end-to-end checks, one PASS/FAIL line each.
// Exits nonzero if any check fails or overruns its time limit.

#include <ttr/bigint.hpp>
#include <ttr/cache.hpp>
#include <ttr/canonical.hpp>
#include <ttr/coeffs.hpp>
#include <ttr/compare.hpp>
#include <ttr/cutsets.hpp>
#include <ttr/enumerate.hpp>
#include <ttr/families.hpp>
#include <ttr/graph.hpp>
#include <ttr/search.hpp>
#include <ttr/verify.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace ttr;
namespace fs = std::filesystem;

namespace {

std::optional<CoeffCache> g_cache;

CoeffVector cc(const LabeledGraph& g) {
  const auto key = canonical_key(g);
  if (auto hit = g_cache->load(key, Engine::kAuto)) return *hit;
  auto cv = coeffs(g);
  g_cache->store(key, Engine::kAuto, cv);
  return cv;
}

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    notes << (notes.tellp() > 0 ? "; " : "") << what;
  }
};

int g_failed = 0;

void criterion(int idx, const char* title, double limit_s,
               const std::function<std::string(Check&)>& body) {
  Check c;
  std::string summary;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    summary = body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes << "exception: " << e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit_s) {
    c.ok = false;
    c.notes << (c.notes.tellp() > 0 ? "; " : "") << "over time limit";
  }
  if (!c.ok) ++g_failed;
  std::printf("%s %2d/11  %-58s  %8.2fs (limit %4.0fs)%s%s%s%s\n",
              c.ok ? "PASS" : "FAIL", idx, title, secs, limit_s,
              summary.empty() ? "" : "  [", summary.c_str(),
              summary.empty() ? "" : "]",
              c.notes.tellp() > 0 ? ("  -- " + c.notes.str()).c_str() : "");
  std::fflush(stdout);
}

std::string suite_criterion(Check& c, const char* name) {
  VerifyOptions opts;
  opts.cache = &*g_cache;
  const SuiteReport rep = run_verify_suite(name, opts);
  std::size_t ok = 0;
  for (const auto& claim : rep.claims) {
    c.require(claim.pass, claim.name + ": " + claim.details);
    ok += claim.pass;
  }
  std::ostringstream s;
  s << "suite " << name << ", " << ok << '/' << rep.claims.size() << " claims";
  return s.str();
}

bool targets_saturated(const LabeledGraph& g) {
  for (int t = 0; t < 3; ++t)
    if (std::popcount(g.adjacency_mask(t)) != g.num_vertices() - 1) return false;
  return g.adjacency_mask(0) >> 1 & 1 && g.adjacency_mask(0) >> 2 & 1 &&
         g.adjacency_mask(1) >> 2 & 1;
}

}  // namespace

int main() {
  const fs::path cache_dir =
      fs::temp_directory_path() / ("ttr_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(cache_dir);
  g_cache.emplace(cache_dir);

  criterion(1, "G_{4,4}: four classes, exact vectors, strict ordering", 1.0,
            [](Check& c) { return suite_criterion(c, "example1"); });

  criterion(2, "G_{5,8}: golden coefficient table, dominant top class", 5.0,
            [](Check& c) { return suite_criterion(c, "appendixA5"); });

  criterion(3, "G_{6,13}: golden coefficient table, dominant top class", 60.0,
            [](Check& c) { return suite_criterion(c, "appendixA6"); });

  criterion(4, "near-zero local optima are A(n,l) / A*(n,3)", 600.0, [](Check& c) {
    const struct { int n, l; bool star; } cases[] = {
        {7, 2, false}, {7, 3, true}, {8, 2, false}, {8, 3, true}, {8, 4, false}};
    for (const auto& [n, l, star] : cases) {
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(l) + ")";
      const SearchOptions opts{1'000'000, Engine::kAuto, &*g_cache};
      const auto r = find_local_opt(n, num_slots(n) - l, End::kZero, opts);
      const LabeledGraph want = star ? family_Astar(n) : family_A(n, l);
      c.require(r.unique, tag + " winner not unique");
      c.require(r.winner_key == canonical_key(want), tag + " wrong winner");
      c.require(targets_saturated(r.winner), tag + " winner misses target edges");
    }
    return std::string("5 cases");
  });

  criterion(5, "near-one local optima are A'(n,l)", 600.0, [](Check& c) {
    const struct { int n, l; } cases[] = {{7, 2}, {8, 2}, {9, 2}, {9, 3}};
    for (const auto& [n, l] : cases) {
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(l) + ")";
      const SearchOptions opts{1'000'000, Engine::kAuto, &*g_cache};
      const auto r = find_local_opt(n, num_slots(n) - l, End::kOne, opts);
      c.require(r.unique, tag + " winner not unique");
      c.require(r.winner_key == canonical_key(family_Aprime(n, l)),
                tag + " wrong winner");
    }
    return std::string("4 cases");
  });

  criterion(6, "A(n,2) vs A'(n,2): one crossing, signs at the ends", 120.0,
            [](Check& c) {
    for (int n : {7, 8}) {
      const std::string tag = "n=" + std::to_string(n);
      const auto ca = cc(family_A(n, 2)), cb = cc(family_Aprime(n, 2));
      const auto v = classify_pair(ca, cb);
      c.require(v.relation == Relation::kCrossing, tag + " not a crossing");
      c.require(v.crossings.size() == 1, tag + " crossing not unique");
      c.require(v.near0.winner == Winner::kFirst, tag + " near 0 should favor A");
      c.require(v.near1.winner == Winner::kSecond, tag + " near 1 should favor A'");
      if (n == 8) {
        const BigRat low = evaluate(cb, BigRat(1, 10)) - evaluate(ca, BigRat(1, 10));
        const BigRat high = evaluate(cb, BigRat(9, 10)) - evaluate(ca, BigRat(9, 10));
        c.require(low < 0, "difference not negative at 1/10");
        c.require(high > 0, "difference not positive at 9/10");
      }
    }
    return std::string("n=7,8");
  });

  criterion(7, "one edge short of complete: Z beats X and Y, 3 classes", 300.0,
            [](Check& c) {
    for (int n = 5; n <= 9; ++n) {
      const std::string tag = "n=" + std::to_string(n);
      const LabeledGraph x = family_X(n), y = family_Y(n), z = family_Z(n);
      const auto cx = cc(x), cy = cc(y), cz = cc(z);
      for (const auto* rival : {&cx, &cy}) {
        bool all_ge = true, strict = false;
        for (int i = 2; i <= cz.m; ++i) {
          if (cz.at(i) < rival->at(i)) all_ge = false;
          if (cz.at(i) > rival->at(i)) strict = true;
        }
        c.require(all_ge && strict,
                  tag + (rival == &cx ? " Z vs X" : " Z vs Y") + " not dominant");
      }
      EnumerateOptions eopts;
      const auto classes = enumerate_gnm(n, num_slots(n) - 1, eopts);
      std::vector<CanonicalKey> got, want = {canonical_key(x), canonical_key(y),
                                             canonical_key(z)};
      for (const auto& cls : classes) got.push_back(cls.key);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      c.require(got == want, tag + " classes are not exactly {X, Y, Z}");
    }
    return std::string("n=5..9");
  });

  criterion(8, "A(n,3) vs A*(n,3): tie through N_5, N_6 gap -72", 120.0,
            [](Check& c) {
    for (int n = 7; n <= 9; ++n) {
      const std::string tag = "n=" + std::to_string(n);
      const auto ca = cc(family_A(n, 3)), cs = cc(family_Astar(n));
      for (int i = 2; i <= 5; ++i)
        c.require(ca.at(i) == cs.at(i), tag + " N_" + std::to_string(i) + " differs");
      c.require(ca.at(6) - cs.at(6) == -72, tag + " N_6 gap is not -72");
    }
    return std::string("n=7,8,9");
  });

  criterion(9, "P_3 maximizers: star always, triangle ties only at m'=3", 60.0,
            [](Check& c) {
    int cases = 0;
    for (int np = 3; np <= 7; ++np)
      for (int mp = 0; mp <= np - 1; ++mp, ++cases) {
        const std::string tag =
            "(" + std::to_string(np) + "," + std::to_string(mp) + ")";
        const auto r = max_p3_search(np, mp);
        c.require(r.max_p3 == static_cast<std::uint64_t>(mp) * (mp - 1) / 2,
                  tag + " wrong maximum");
        c.require(r.star_achieves, tag + " star not maximal");
        if (mp == 3)
          c.require(r.achievers == 2 && r.triangle_achieves,
                    tag + " expected exactly star and triangle");
        else
          c.require(r.achievers == 1, tag + " star not the unique maximizer");
      }
    return std::to_string(cases) + " (n',m') pairs";
  });

  criterion(10, "A'(n,2) cutsets: size bounds, target stars, next layer", 300.0,
            [](Check& c) {
    for (int n : {7, 8}) {
      const std::string tag = "n=" + std::to_string(n);
      const LabeledGraph g = family_Aprime(n, 2);
      const auto profile = enumerate_minimal_cutsets(g);
      const auto bounds = cutset_size_bounds_report(g, profile);
      const auto layers = cutset_structure_report(g, profile);
      c.require(bounds.all_hold() && bounds.checked == profile.total,
                tag + " size bounds violated");
      c.require(layers.smallest_are_target_stars && layers.smallest_size == n - 1 &&
                    profile.counts_by_size.at(n - 1) == 3,
                tag + " smallest cutsets are not the 3 target stars");
      c.require(layers.next_smallest_leaves_order2 &&
                    layers.next_size == (n == 7 ? 9 : 11),
                tag + " next-smallest layer wrong");
    }
    return std::string("n=7,8");
  });

  criterion(11, "engines agree, Monte Carlo coverage, inequalities", 300.0,
            [](Check& c) {
    const SuiteReport rep = run_cross_validation(20260815, 100, 100'000);
    for (const auto& claim : rep.claims)
      c.require(claim.pass, claim.name + ": " + claim.details);
    return std::string("100 random graphs");
  });

  std::printf("acceptance: %d/11 criteria passed\n", 11 - g_failed);
  fs::remove_all(cache_dir);
  return g_failed == 0 ? 0 : 1;
}
