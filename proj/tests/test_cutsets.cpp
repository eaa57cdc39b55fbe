#include <doctest.h>

#include <map>
#include <random>

#include "ttr/bigint.hpp"
#include "ttr/coeffs.hpp"
#include "ttr/cutsets.hpp"
#include "ttr/errors.hpp"
#include "ttr/families.hpp"
#include "ttr/graph.hpp"

using namespace ttr;

namespace {

using SizeCounts = std::map<int, std::uint64_t>;

LabeledGraph random_connected(std::mt19937_64& rng, int n) {
  for (;;) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3) es.push_back({u, v});
    LabeledGraph g(n, std::move(es));
    const std::uint64_t all = (1ull << n) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f;) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.adjacency_mask(v);
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    if (seen == all) return g;
  }
}

}  // namespace

TEST_SUITE("cutsets") {

TEST_CASE("pairwise minimum cuts") {
  CHECK(lambda_rst(LabeledGraph::complete(4)) == 3);
  const LabeledGraph path(3, {{0, 1}, {1, 2}});
  CHECK(lambda_rst(path) == 1);
  CHECK(lambda_rst(family_Aprime(7, 2)) == 6);
  CHECK(lambda_rst(family_Aprime(8, 2)) == 7);
}

TEST_CASE("matching-deleted family, seven vertices") {
  const auto profile = enumerate_minimal_cutsets(family_Aprime(7, 2));
  CHECK(profile.lambda == 6);
  CHECK(profile.total == 48);
  CHECK(profile.counts_by_size ==
        SizeCounts{{6, 3}, {9, 12}, {10, 15}, {11, 12}, {12, 6}});
  const std::vector<CutsetGroup> expected = {
      {6, 0, 6, 3},  {9, 1, 5, 12},  {10, 1, 0, 3},
      {10, 2, 4, 12}, {11, 2, 0, 12}, {12, 2, 4, 6}};
  CHECK(profile.groups == expected);
  // Lex-least smallest cutset is the star at the first target.
  const std::vector<Edge> star_r = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}};
  CHECK(profile.witness_by_size.at(6) == star_r);
}

TEST_CASE("matching-deleted family, eight vertices") {
  const auto profile = enumerate_minimal_cutsets(family_Aprime(8, 2));
  CHECK(profile.lambda == 7);
  CHECK(profile.total == 96);
  CHECK(profile.counts_by_size == SizeCounts{{7, 3},
                                             {11, 12},
                                             {12, 6},
                                             {13, 12},
                                             {14, 36},
                                             {15, 21},
                                             {16, 6}});
}

TEST_CASE("star-deleted families") {
  const auto p72 = enumerate_minimal_cutsets(family_A(7, 2));
  CHECK(p72.lambda == 6);
  CHECK(p72.total == 48);
  CHECK(p72.counts_by_size ==
        SizeCounts{{6, 3}, {8, 3}, {9, 6}, {10, 15}, {11, 18}, {12, 3}});

  const auto p83 = enumerate_minimal_cutsets(family_A(8, 3));
  CHECK(p83.lambda == 7);
  CHECK(p83.total == 96);
  CHECK(p83.counts_by_size ==
        SizeCounts{{7, 3}, {9, 3}, {11, 9}, {12, 12}, {13, 21}, {14, 36}, {15, 12}});
}

TEST_CASE("size bounds hold with a tight lower layer") {
  for (int n : {7, 8}) {
    const auto g = family_Aprime(n, 2);
    const auto profile = enumerate_minimal_cutsets(g);
    const auto bounds = cutset_size_bounds_report(g, profile);
    CHECK(bounds.all_hold());
    CHECK(bounds.checked == profile.total);
    CHECK(bounds.at_lower == (n == 7 ? 12 : 24));
  }
}

TEST_CASE("smallest cutsets are the three target stars") {
  for (int n : {7, 8}) {
    const auto g = family_Aprime(n, 2);
    const auto profile = enumerate_minimal_cutsets(g);
    const auto structure = cutset_structure_report(g, profile);
    CHECK(structure.smallest_are_target_stars);
    CHECK(structure.smallest_size == n - 1);
    CHECK(structure.next_smallest_leaves_order2);
    CHECK(structure.next_size == (n == 7 ? 9 : 11));
  }
}

TEST_CASE("counting cutsets pins the top coefficients") {
  // Every i-subset with i > m - lambda connects the targets; at i = m -
  // lambda exactly the complement of a lambda-cutset fails.
  for (const auto& [g, expect] :
       std::vector<std::pair<LabeledGraph, long long>>{{family_Aprime(7, 2), 27129},
                                                       {family_A(7, 2), 27129},
                                                       {family_A(8, 3), 480697}}) {
    const auto profile = enumerate_minimal_cutsets(g);
    const auto cv = coeffs(g);
    const int m = g.num_edges();
    for (int i = m - profile.lambda + 1; i <= m; ++i) CHECK(cv.at(i) == binomial(m, i));
    CHECK(cv.at(m - profile.lambda) ==
          binomial(m, profile.lambda) - profile.counts_by_size.at(profile.lambda));
    CHECK(cv.at(m - profile.lambda) == expect);
  }
}

TEST_CASE("sweep and partition methods agree") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 15) {
    const auto g = random_connected(rng, 4 + static_cast<int>(rng() % 3));
    if (g.num_edges() > 20) continue;
    ++done;
    const auto a = enumerate_minimal_cutsets(g, CutsetMethod::kPartition);
    const auto b = enumerate_minimal_cutsets(g, CutsetMethod::kSweep);
    CHECK(a.lambda == b.lambda);
    CHECK(a.total == b.total);
    CHECK(a.counts_by_size == b.counts_by_size);
    CHECK(a.groups == b.groups);
    CHECK(a.witness_by_size == b.witness_by_size);
    CHECK(a.lambda == lambda_rst(g));
  }
}

TEST_CASE("disconnected input rejected, sweep guarded") {
  CHECK_THROWS_AS((void)enumerate_minimal_cutsets(LabeledGraph(4, {{0, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)enumerate_minimal_cutsets(family_A(8, 2), CutsetMethod::kSweep),
      budget_error);  // m = 26 exceeds the sweep guard
}

TEST_CASE("profile serializes with counts and groups") {
  const auto profile = enumerate_minimal_cutsets(LabeledGraph::complete(4));
  const auto j = cutset_profile_to_json(profile);
  CHECK(j.find("\"lambda\":3") != std::string::npos);
  CHECK(j.find("\"counts\"") != std::string::npos);
  CHECK(j.find("\"groups\"") != std::string::npos);
}

}  // TEST_SUITE
