#include <doctest.h>

#include "ttr/coeffs.hpp"
#include "ttr/families.hpp"
#include "ttr/graph.hpp"
#include "ttr/subgraph_count.hpp"

using namespace ttr;

TEST_SUITE("subgraphs") {

TEST_CASE("pattern names round trip") {
  for (auto p : {Pattern::kP3, Pattern::kP4, Pattern::kK3, Pattern::kK13})
    CHECK(pattern_from_name(pattern_name(p)) == p);
  CHECK_THROWS_AS((void)pattern_from_name("K4"), std::invalid_argument);
}

TEST_CASE("deleted star of the star-deleted family") {
  const LabeledGraph del(7, family_A(7, 3).deleted_edges());
  CHECK(count_nontarget_subgraphs(del, Pattern::kP3) == 3);
  CHECK(count_nontarget_subgraphs(del, Pattern::kK3) == 0);
  CHECK(count_nontarget_subgraphs(del, Pattern::kK13) == 1);
  CHECK(count_nontarget_subgraphs(del, Pattern::kP4) == 0);
}

TEST_CASE("deleted triangle of the triangle-deleted family") {
  const LabeledGraph del(7, family_Astar(7).deleted_edges());
  CHECK(count_nontarget_subgraphs(del, Pattern::kP3) == 3);
  CHECK(count_nontarget_subgraphs(del, Pattern::kK3) == 1);
  CHECK(count_nontarget_subgraphs(del, Pattern::kK13) == 0);
  CHECK(count_nontarget_subgraphs(del, Pattern::kP4) == 0);
}

TEST_CASE("complete non-target block") {
  const auto k7 = LabeledGraph::complete(7);  // non-targets induce K_4
  CHECK(count_nontarget_subgraphs(k7, Pattern::kP3) == 12);
  CHECK(count_nontarget_subgraphs(k7, Pattern::kK3) == 4);
  CHECK(count_nontarget_subgraphs(k7, Pattern::kK13) == 4);
  CHECK(count_nontarget_subgraphs(k7, Pattern::kP4) == 12);
}

TEST_CASE("path among non-targets") {
  const LabeledGraph g(7, {{3, 4}, {4, 5}, {5, 6}});
  CHECK(count_nontarget_subgraphs(g, Pattern::kP3) == 2);
  CHECK(count_nontarget_subgraphs(g, Pattern::kP4) == 1);
  CHECK(count_nontarget_subgraphs(g, Pattern::kK3) == 0);
}

TEST_CASE("target-incident edges never count") {
  const LabeledGraph g(5, {{0, 3}, {0, 4}, {1, 3}, {2, 4}, {3, 4}});
  CHECK(count_nontarget_subgraphs(g, Pattern::kP3) == 0);
  CHECK(count_nontarget_subgraphs(g, Pattern::kK3) == 0);
  CHECK(count_nontarget_subgraphs(g, Pattern::kK13) == 0);
  CHECK(count_nontarget_subgraphs(g, Pattern::kP4) == 0);
}

TEST_CASE("pattern-count differences explain the order-6 coefficient gap") {
  for (int n : {7, 8, 9}) {
    const auto a = family_A(n, 3), s = family_Astar(n);
    const auto dP4 = count_nontarget_subgraphs(a, Pattern::kP4) -
                     count_nontarget_subgraphs(s, Pattern::kP4);
    const auto dK13 = count_nontarget_subgraphs(a, Pattern::kK13) -
                      count_nontarget_subgraphs(s, Pattern::kK13);
    const auto dK3 = count_nontarget_subgraphs(a, Pattern::kK3) -
                     count_nontarget_subgraphs(s, Pattern::kK3);
    CHECK(dP4 == 0);
    CHECK(dK13 == -1);
    CHECK(dK3 == 1);
    const BigInt gap = coeffs(a).at(6) - coeffs(s).at(6);
    CHECK(gap == 30 * dP4 + 6 * dK13 - 66 * dK3);
  }
}

}  // TEST_SUITE
