#include <doctest.h>

#include <stdexcept>

#include "ttr/families.hpp"
#include "ttr/graph.hpp"

using namespace ttr;

TEST_SUITE("families") {

TEST_CASE("star-deleted family") {
  const auto g = family_A(7, 2);
  CHECK(g.num_vertices() == 7);
  CHECK(g.num_edges() == 19);
  CHECK(g.deleted_edges() == std::vector<Edge>{{3, 4}, {3, 5}});
  for (int t = 0; t < 3; ++t) CHECK(g.degree(t) == 6);
  CHECK(family_A(8, 4).deleted_edges() ==
        std::vector<Edge>{{3, 4}, {3, 5}, {3, 6}, {3, 7}});
}

TEST_CASE("triangle-deleted family") {
  const auto g = family_Astar(7);
  CHECK(g.num_edges() == 18);
  CHECK(g.deleted_edges() == std::vector<Edge>{{3, 4}, {3, 5}, {4, 5}});
}

TEST_CASE("matching-deleted family") {
  const auto g = family_Aprime(7, 2);
  CHECK(g.num_edges() == 19);
  CHECK(g.deleted_edges() == std::vector<Edge>{{3, 4}, {5, 6}});
  CHECK(family_Aprime(9, 3).deleted_edges() ==
        std::vector<Edge>{{3, 4}, {5, 6}, {7, 8}});
}

TEST_CASE("single-edge families") {
  CHECK(family_X(5).deleted_edges() == std::vector<Edge>{{0, 1}});
  CHECK(family_Y(5).deleted_edges() == std::vector<Edge>{{0, 3}});
  CHECK(family_Z(5).deleted_edges() == std::vector<Edge>{{3, 4}});
  for (int n = 5; n <= 9; ++n) {
    CHECK(family_X(n).num_edges() == num_slots(n) - 1);
    CHECK(family_Y(n).num_edges() == num_slots(n) - 1);
    CHECK(family_Z(n).num_edges() == num_slots(n) - 1);
  }
}

TEST_CASE("order-4 edge cases") {
  CHECK(family_X(4).num_edges() == 5);  // warns, still constructs
  CHECK(family_Y(4).num_edges() == 5);
  CHECK_THROWS_AS((void)family_Z(4), std::invalid_argument);
}

TEST_CASE("parameter ranges enforced") {
  CHECK_THROWS_AS((void)family_A(7, 4), std::invalid_argument);   // l <= n-4
  CHECK_THROWS_AS((void)family_A(7, 1), std::invalid_argument);   // l >= 2
  CHECK_THROWS_AS((void)family_A(6, 2), std::invalid_argument);   // n >= 7
  CHECK_THROWS_AS((void)family_Aprime(7, 3), std::invalid_argument);  // l <= (n-3)/2
  CHECK_THROWS_AS((void)family_Astar(6), std::invalid_argument);
}

TEST_CASE("lookup by name") {
  CHECK(family_by_name("A", 7, 2) == family_A(7, 2));
  CHECK(family_by_name("Astar", 8) == family_Astar(8));
  CHECK(family_by_name("Aprime", 8, 2) == family_Aprime(8, 2));
  CHECK(family_by_name("Z", 6) == family_Z(6));
  CHECK(family_by_name("Kn", 5) == LabeledGraph::complete(5));
  CHECK_THROWS_AS((void)family_by_name("A", 7), std::invalid_argument);
  CHECK_THROWS_AS((void)family_by_name("Q", 7), std::invalid_argument);
}

}  // TEST_SUITE
