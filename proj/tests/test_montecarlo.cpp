#include <doctest.h>

#include <cmath>

#include "ttr/coeffs.hpp"
#include "ttr/families.hpp"
#include "ttr/graph.hpp"
#include "ttr/montecarlo.hpp"

using namespace ttr;

TEST_SUITE("montecarlo") {

TEST_CASE("deterministic for a fixed seed") {
  const auto g = family_Z(5);
  const auto a = mc_reliability(g, 0.4, 20000, 99);
  const auto b = mc_reliability(g, 0.4, 20000, 99);
  CHECK(a.successes == b.successes);
  CHECK(a.estimate == b.estimate);
  const auto c = mc_reliability(g, 0.4, 20000, 100);
  CHECK(a.successes != c.successes);  // seed matters
}

TEST_CASE("degenerate probabilities are exact") {
  const auto g = family_Z(5);
  CHECK(mc_reliability(g, 1.0, 5000, 1).successes == 5000);
  CHECK(mc_reliability(g, 0.0, 5000, 1).successes == 0);
}

TEST_CASE("estimate tracks the exact value on the triangle") {
  const LabeledGraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  // Exact value at p = 1/2 is 1/2.
  const auto est = mc_reliability(tri, 0.5, 200000, 7);
  CHECK(std::abs(est.estimate - 0.5) < 0.01);
  CHECK(est.half_width > 0.0);
  CHECK(est.half_width < 0.01);
}

TEST_CASE("interval covers the exact value on benchmark families") {
  int inside = 0, total = 0;
  std::uint64_t seed = 1000;
  for (const auto& g : {family_A(7, 2), family_Aprime(7, 2), family_Z(6)}) {
    const auto cv = coeffs(g);
    for (int j = 1; j <= 7; j += 2) {
      const double exact = rational_to_double(evaluate(cv, BigRat(j, 8)));
      const auto est = mc_reliability(g, j / 8.0, 100000, seed++);
      ++total;
      if (std::abs(est.estimate - exact) <= est.half_width) ++inside;
    }
  }
  CHECK(total == 12);
  CHECK(inside >= 11);  // 95% Wilson intervals; all 12 inside for these seeds
}

TEST_CASE("result records its inputs") {
  const auto est = mc_reliability(family_Z(5), 0.3, 1234, 42);
  CHECK(est.p == 0.3);
  CHECK(est.samples == 1234);
  CHECK(est.seed == 42);
  CHECK(est.estimate == doctest::Approx(double(est.successes) / 1234));
}

}  // TEST_SUITE
