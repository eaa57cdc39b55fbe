#pragma once

#include <array>
#include <vector>

#include "ttr/bigint.hpp"
#include "ttr/coeffs.hpp"
#include "ttr/graph.hpp"

namespace ttr {

// N_i split into b_i (minimal connecting sets: removing any single edge
// disconnects the targets) and c_i = N_i - b_i. Minimal sets are trees with
// every leaf a target, so b_i = 0 for i >= n.
struct MinimalSplit {
  int m = 0;
  std::vector<BigInt> b, c;  // index i = 0..m
};

// b_i for i <= max_size by direct enumeration with the definitional
// one-edge-removal check.
std::vector<BigInt> minimal_counts_upto(const LabeledGraph& g, int max_size);

// Full split; guarded to m <= 24. c comes from N (engine kAuto) minus b.
MinimalSplit minimal_split(const LabeledGraph& g);

// The four 3-edge categories in graphs containing the target triangle:
//   a: the set {rs, rt, st} itself;
//   b: two target-target edges plus any other edge;
//   c: one target-target edge plus a 2-path joining the third target
//      through one non-target;
//   d: the claw {rv, sv, tv} at one non-target.
// a+b+c+d = N_3. Requires edges rs, rt, st all present.
struct N3Decomposition {
  BigInt a, b, c, d;
  BigInt total() const { return a + b + c + d; }
};
N3Decomposition n3_decomposition(const LabeledGraph& g);

// Closed forms for b_4, c_4, b_5, c_5 against enumerated values, reported
// side by side (not asserted). b_5 is printed in three algebraically equal
// shapes; all three are evaluated. Requires every target-incident edge
// present (target degrees n-1).
struct FormulaReport {
  int n = 0, m = 0;
  BigInt b4_formula, c4_formula, c5_formula;
  std::array<BigInt, 3> b5_formulas;
  BigInt b4_enum, b5_enum, c4_enum, c5_enum;

  bool b4_matches() const { return b4_formula == b4_enum; }
  bool c4_matches() const { return c4_formula == c4_enum; }
  bool b5_matches() const { return b5_formulas[0] == b5_enum; }
  bool c5_matches() const { return c5_formula == c5_enum; }
};
FormulaReport formula_suite(const LabeledGraph& g, Engine engine = Engine::kAuto);

}  // namespace ttr
