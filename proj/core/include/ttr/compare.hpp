#pragma once

#include <string>
#include <vector>

#include "ttr/bigint.hpp"
#include "ttr/coeffs.hpp"

namespace ttr {

enum class Winner { kFirst, kSecond, kEqual };

// Lexicographic order of two coefficient vectors read from one end; index is
// the first differing position (-1 when equal). Near p=0 the vectors are read
// upward from N_2; near p=1 downward from N_m.
struct EndOrder {
  Winner winner = Winner::kEqual;
  int index = -1;
};

EndOrder near_zero_order(const CoeffVector& a, const CoeffVector& b);
EndOrder near_one_order(const CoeffVector& a, const CoeffVector& b);

// Standard-basis coefficients of R_a(p) - R_b(p) (degree m). Requires equal m.
std::vector<BigInt> difference_poly(const CoeffVector& a, const CoeffVector& b);

// Exact sign of poly(num / 2^bits); poly in standard basis.
int sign_at_dyadic(const std::vector<BigInt>& poly, const BigInt& num, int bits);

enum class Relation {
  kFirstDominates,   // every N_i >=, at least one >; no crossing possible
  kSecondDominates,
  kEqual,
  kCrossing,                 // sign change isolated on (0,1)
  kNoCrossingIncomparable,   // vectors incomparable, no sign change found
};

const char* relation_name(Relation r);

// Open dyadic interval (lo/2^bits, hi/2^bits) bracketing a sign change;
// lo == hi marks an exact root hit.
struct CrossingInterval {
  BigInt lo, hi;
  int bits = 0;
};

struct ComparisonVerdict {
  EndOrder near0, near1;
  Relation relation = Relation::kEqual;
  std::vector<CrossingInterval> crossings;
  int grid_bits = 10;
  int refine_bits = 40;
};

// Full exact comparison: end orders, dominance test, then a sign scan of the
// difference on the dyadic grid j/2^grid_bits plus the anchor points
// 2^-refine_bits and 1 - 2^-refine_bits, with each sign change bisected down
// to width 2^-refine_bits. The anchor signs provably agree with the end
// orders when m < refine_bits (coefficients are bounded by 2*C(m,i), so the
// leading term dominates the tail at p = 2^-refine_bits).
ComparisonVerdict classify_pair(const CoeffVector& a, const CoeffVector& b,
                                int grid_bits = 10, int refine_bits = 40);

std::string verdict_to_json(const ComparisonVerdict& v);

}  // namespace ttr
