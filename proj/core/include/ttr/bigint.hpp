#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ttr {

// Exact arbitrary-precision integers and rationals. Counts of edge subsets
// reach C(120,60) at the engine guard sizes, far beyond 64 bits.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n,k); 0 outside 0 <= k <= n. Cached triangle, safe for concurrent reads
// after first use on a given row size.
const BigInt& binomial(int n, int k);

std::string to_decimal(const BigInt& v);
BigInt bigint_from_decimal(std::string_view s);  // throws std::invalid_argument

// "a/b" (b omitted when 1). Values are normalized by BigRat itself.
std::string rational_to_string(const BigRat& q);
BigRat rational_from_string(std::string_view s);
double rational_to_double(const BigRat& q);

}  // namespace ttr
