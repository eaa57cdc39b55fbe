#include "ttr/bigint.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace ttr {

const BigInt& binomial(int n, int k) {
  static const BigInt zero = 0;
  if (k < 0 || n < 0 || k > n) return zero;
  static std::mutex mu;
  static std::vector<std::vector<BigInt>> pascal{{1}};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(pascal.size()) <= n) {
    const auto& prev = pascal.back();
    std::vector<BigInt> row(pascal.size() + 1, 1);
    for (size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
    pascal.push_back(std::move(row));
  }
  return pascal[n][k];
}

std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt bigint_from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer string");
  size_t start = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer string");
  for (size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad integer string: '" + std::string(s) + "'");
  return BigInt(std::string(s));
}

std::string rational_to_string(const BigRat& q) {
  std::string s = boost::multiprecision::numerator(q).str();
  if (boost::multiprecision::denominator(q) != 1)
    s += "/" + boost::multiprecision::denominator(q).str();
  return s;
}

BigRat rational_from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return BigRat(bigint_from_decimal(s));
  BigInt num = bigint_from_decimal(s.substr(0, slash));
  BigInt den = bigint_from_decimal(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return BigRat(num, den);
}

double rational_to_double(const BigRat& q) { return q.convert_to<double>(); }

}  // namespace ttr
