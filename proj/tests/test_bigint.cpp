#include <doctest.h>

#include "ttr/bigint.hpp"

using namespace ttr;

TEST_SUITE("bigint") {

TEST_CASE("binomial small values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(28, 14) == 40116600);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 10) == 1);
}

TEST_CASE("binomial outside the triangle is zero") {
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-2, 0) == 0);
}

TEST_CASE("binomial symmetry and Pascal identity") {
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n, n - k));
      if (n > 0) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("decimal round trip") {
  CHECK(to_decimal(BigInt(0)) == "0");
  CHECK(to_decimal(BigInt(-42)) == "-42");
  const BigInt big = BigInt(1) << 64;
  CHECK(to_decimal(big) == "18446744073709551616");
  CHECK(bigint_from_decimal("18446744073709551616") == big);
  CHECK(bigint_from_decimal("-7") == -7);
  CHECK_THROWS_AS((void)bigint_from_decimal("12x"), std::invalid_argument);
}

TEST_CASE("rational helpers") {
  CHECK(rational_to_string(BigRat(1, 3)) == "1/3");
  CHECK(rational_to_string(BigRat(4, 2)) == "2");
  CHECK(rational_from_string("3/6") == BigRat(1, 2));
  CHECK(rational_from_string("5") == BigRat(5));
  CHECK(rational_to_double(BigRat(1, 2)) == doctest::Approx(0.5));
  CHECK(rational_to_double(BigRat(1, 4)) == 0.25);
}

}  // TEST_SUITE
