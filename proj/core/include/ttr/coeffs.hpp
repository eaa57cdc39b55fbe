#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ttr/bigint.hpp"
#include "ttr/graph.hpp"

namespace ttr {

// N_i = number of i-edge subgraphs (edge subsets, all n vertices kept) in
// which r, s, t lie in one component. counts[i] indexes by subset size,
// i = 0..m; N_0 = N_1 = 0 always.
struct CoeffVector {
  int n = 0;
  int m = 0;
  std::vector<BigInt> counts;

  const BigInt& at(int i) const;
  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

enum class Engine { kAuto, kBruteForce, kDecomposition };

const char* engine_name(Engine e);

// Direct sweep over all 2^m edge subsets with a union-find connectivity
// check per subset. Engine of record; guarded to m <= 28.
CoeffVector coeffs_bruteforce(const LabeledGraph& g);

// Sums over the vertex set W of the component containing the targets:
// N_i = sum_W sum_j conn(W,j) * C(e(V\W), i-j), with conn(W,j) the number
// of j-edge spanning connected subgraphs of G[W], computed by
// inclusion-exclusion over the piece holding the least vertex of W.
// Guarded to n <= 16.
CoeffVector coeffs_decomposition(const LabeledGraph& g);

// kAuto picks the decomposition engine when n <= 16, else brute force
// when m <= 28, else throws budget_error.
CoeffVector coeffs(const LabeledGraph& g, Engine engine = Engine::kAuto);

// Checks 0 <= N_i <= C(m,i), the superset inequality
// (i+1) N_{i+1} >= (m-i) N_i, and N_m in {0,1}; throws std::logic_error.
void validate_coeff_invariants(const CoeffVector& v);

// R_3(G;p) = sum_i N_i p^i (1-p)^(m-i), exactly; requires 0 <= p <= 1.
BigRat evaluate(const CoeffVector& v, const BigRat& p);

// JSON {"n":int,"m":int,"N":[decimal strings from i=2]}; CSV "i,N_i".
nlohmann::json coeffs_to_json(const CoeffVector& v);
CoeffVector coeffs_from_json(const nlohmann::json& j);
std::string coeffs_to_csv(const CoeffVector& v);

}  // namespace ttr
