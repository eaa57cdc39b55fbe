#include <doctest.h>

#include <vector>

#include "ttr/canonical.hpp"
#include "ttr/coeffs.hpp"
#include "ttr/errors.hpp"
#include "ttr/families.hpp"
#include "ttr/graph.hpp"
#include "ttr/search.hpp"

using namespace ttr;

namespace {

std::vector<long long> tail(const CoeffVector& v) {
  std::vector<long long> out;
  for (int i = 2; i <= v.m; ++i) out.push_back(v.at(i).convert_to<long long>());
  return out;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("four-vertex best graph dominates uniformly") {
  const auto r = find_umrg(4, 4);
  CHECK(r.status == UmrgStatus::kUniformBest);
  CHECK(r.num_classes == 4);
  REQUIRE(r.best.has_value());
  const auto g1 = LabeledGraph::from_complete_minus(4, {{0, 3}, {2, 3}});
  CHECK(*r.best == canonical_key(g1));
}

TEST_CASE("five-vertex eight-edge optimum near zero") {
  const auto r = find_local_opt(5, 8, End::kZero);
  CHECK(r.num_classes == 8);
  CHECK(r.unique);
  CHECK(tail(r.winner_coeffs) == std::vector<long long>{3, 25, 60, 55, 28, 8, 1});
}

TEST_CASE("four-vertex optimum near one") {
  const auto r = find_local_opt(4, 4, End::kOne);
  CHECK(r.unique);
  CHECK(tail(r.winner_coeffs) == std::vector<long long>{3, 4, 1});
}

TEST_CASE("crossing pair blocks a uniform winner at seven vertices") {
  const auto r = find_umrg(7, 19);
  CHECK(r.status == UmrgStatus::kNone);
  CHECK(r.num_classes == 11);
  REQUIRE(r.crossing_pair.has_value());
  const auto ka = canonical_key(family_A(7, 2)), kp = canonical_key(family_Aprime(7, 2));
  const auto& [w1, w2] = *r.crossing_pair;
  CHECK(((w1 == ka && w2 == kp) || (w1 == kp && w2 == ka)));
  REQUIRE(r.crossing.has_value());
  CHECK(r.crossing->lo > 0);
}

TEST_CASE("two-path maximizers") {
  const auto r63 = max_p3_search(6, 3);
  CHECK(r63.max_p3 == 3);
  CHECK(r63.achievers == 2);
  CHECK(r63.star_achieves);
  CHECK(r63.triangle_achieves);

  const auto r64 = max_p3_search(6, 4);
  CHECK(r64.max_p3 == 6);
  CHECK(r64.achievers == 1);
  CHECK(r64.star_achieves);
  CHECK_FALSE(r64.triangle_achieves);

  const auto r50 = max_p3_search(5, 0);
  CHECK(r50.max_p3 == 0);
  CHECK(r50.achievers == 1);

  const auto r76 = max_p3_search(7, 6);
  CHECK(r76.max_p3 == 15);
  CHECK(r76.achievers == 1);
  CHECK(r76.star_achieves);
}

TEST_CASE("search guards") {
  CHECK_THROWS_AS((void)max_p3_search(8, 3), budget_error);
  SearchOptions tiny;
  tiny.budget = 5;
  CHECK_THROWS_AS((void)find_local_opt(6, 10, End::kZero, tiny), budget_error);
}

}  // TEST_SUITE
