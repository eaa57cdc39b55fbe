#include "ttr/compare.hpp"

#include <sstream>
#include <stdexcept>

namespace ttr {

namespace {

void require_same_m(const CoeffVector& a, const CoeffVector& b) {
  if (a.m != b.m)
    throw std::invalid_argument("comparison requires equal edge counts");
}

struct GridPoint {
  BigInt num;
  int bits;
  int sign;
};

int poly_sign(const std::vector<BigInt>& poly, const BigInt& num, int bits) {
  return sign_at_dyadic(poly, num, bits);
}

// Bisect (lo/2^bits, hi/2^bits) with opposite end signs down to width
// 2^-refine_bits (or an exact root).
CrossingInterval bisect(const std::vector<BigInt>& poly, BigInt lo, BigInt hi, int bits,
                        int lo_sign, int refine_bits) {
  while (bits < refine_bits || hi - lo > 1) {
    if (hi - lo == 1) {
      lo <<= 1;
      hi <<= 1;
      ++bits;
    }
    BigInt mid = (lo + hi) / 2;
    const int s = poly_sign(poly, mid, bits);
    if (s == 0) return {mid, mid, bits};
    if (s == lo_sign)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi, bits};
}

}  // namespace

EndOrder near_zero_order(const CoeffVector& a, const CoeffVector& b) {
  require_same_m(a, b);
  for (int i = 0; i <= a.m; ++i) {
    const BigInt &x = a.at(i), &y = b.at(i);
    if (x != y) return {x > y ? Winner::kFirst : Winner::kSecond, i};
  }
  return {Winner::kEqual, -1};
}

EndOrder near_one_order(const CoeffVector& a, const CoeffVector& b) {
  require_same_m(a, b);
  for (int i = a.m; i >= 0; --i) {
    const BigInt &x = a.at(i), &y = b.at(i);
    if (x != y) return {x > y ? Winner::kFirst : Winner::kSecond, i};
  }
  return {Winner::kEqual, -1};
}

std::vector<BigInt> difference_poly(const CoeffVector& a, const CoeffVector& b) {
  require_same_m(a, b);
  const int m = a.m;
  std::vector<BigInt> c(m + 1);
  // p^i (1-p)^{m-i} contributes (-1)^{k-i} C(m-i, k-i) to the p^k coefficient.
  for (int k = 0; k <= m; ++k) {
    BigInt acc = 0;
    for (int i = 0; i <= k; ++i) {
      const BigInt diff = a.at(i) - b.at(i);
      if (diff == 0) continue;
      const BigInt term = diff * binomial(m - i, k - i);
      if ((k - i) & 1)
        acc -= term;
      else
        acc += term;
    }
    c[k] = acc;
  }
  return c;
}

int sign_at_dyadic(const std::vector<BigInt>& poly, const BigInt& num, int bits) {
  if (poly.empty()) return 0;
  const int deg = static_cast<int>(poly.size()) - 1;
  BigInt value = 0, power = 1;
  for (int k = 0; k <= deg; ++k) {
    if (poly[k] != 0) value += (poly[k] * power) << (bits * (deg - k));
    power *= num;
  }
  return value.sign();
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::kFirstDominates: return "first_dominates";
    case Relation::kSecondDominates: return "second_dominates";
    case Relation::kEqual: return "equal";
    case Relation::kCrossing: return "crossing";
    case Relation::kNoCrossingIncomparable: return "no_crossing_incomparable";
  }
  return "?";
}

ComparisonVerdict classify_pair(const CoeffVector& a, const CoeffVector& b, int grid_bits,
                                int refine_bits) {
  require_same_m(a, b);
  if (grid_bits < 1 || refine_bits < grid_bits)
    throw std::invalid_argument("classify_pair: need 1 <= grid_bits <= refine_bits");
  ComparisonVerdict v;
  v.grid_bits = grid_bits;
  v.refine_bits = refine_bits;
  v.near0 = near_zero_order(a, b);
  v.near1 = near_one_order(a, b);
  if (v.near0.winner == Winner::kEqual) {
    v.relation = Relation::kEqual;
    return v;
  }
  bool a_ge = true, b_ge = true;
  for (int i = 0; i <= a.m; ++i) {
    const int cmp = a.at(i).compare(b.at(i));
    if (cmp < 0) a_ge = false;
    if (cmp > 0) b_ge = false;
  }
  if (a_ge || b_ge) {
    v.relation = a_ge ? Relation::kFirstDominates : Relation::kSecondDominates;
    return v;
  }
  const auto poly = difference_poly(a, b);
  // Sample points: 2^-refine_bits, the interior grid, 1 - 2^-refine_bits.
  std::vector<GridPoint> pts;
  pts.push_back({BigInt(1), refine_bits, 0});
  const int grid_n = 1 << grid_bits;
  for (int j = 1; j < grid_n; ++j) pts.push_back({BigInt(j), grid_bits, 0});
  pts.push_back({(BigInt(1) << refine_bits) - 1, refine_bits, 0});
  for (auto& pt : pts) pt.sign = poly_sign(poly, pt.num, pt.bits);

  int last_sign = 0;
  std::size_t last_idx = 0;
  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    const int s = pts[idx].sign;
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      // Promote both endpoints to a common scale before bisecting.
      const GridPoint &l = pts[last_idx], &r = pts[idx];
      const int bits = std::max(l.bits, r.bits);
      const BigInt lo = l.num << (bits - l.bits);
      const BigInt hi = r.num << (bits - r.bits);
      v.crossings.push_back(bisect(poly, lo, hi, bits, last_sign, refine_bits));
    }
    last_sign = s;
    last_idx = idx;
  }
  v.relation = v.crossings.empty() ? Relation::kNoCrossingIncomparable : Relation::kCrossing;
  return v;
}

std::string verdict_to_json(const ComparisonVerdict& v) {
  auto winner_name = [](Winner w) {
    return w == Winner::kFirst ? "first" : (w == Winner::kSecond ? "second" : "equal");
  };
  std::ostringstream os;
  os << "{\"near0\":{\"winner\":\"" << winner_name(v.near0.winner)
     << "\",\"index\":" << v.near0.index << "},";
  os << "\"near1\":{\"winner\":\"" << winner_name(v.near1.winner)
     << "\",\"index\":" << v.near1.index << "},";
  os << "\"relation\":\"" << relation_name(v.relation) << "\",";
  os << "\"grid_bits\":" << v.grid_bits << ",\"refine_bits\":" << v.refine_bits << ",";
  os << "\"crossings\":[";
  for (std::size_t i = 0; i < v.crossings.size(); ++i) {
    if (i) os << ',';
    os << "{\"lo\":\"" << to_decimal(v.crossings[i].lo) << "\",\"hi\":\""
       << to_decimal(v.crossings[i].hi) << "\",\"bits\":" << v.crossings[i].bits << '}';
  }
  os << "]}";
  return os.str();
}

}  // namespace ttr
