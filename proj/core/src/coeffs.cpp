#include "ttr/coeffs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "ttr/errors.hpp"

namespace ttr {

const BigInt& CoeffVector::at(int i) const {
  static const BigInt zero = 0;
  if (i < 0 || i > m) return zero;
  return counts[i];
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::kAuto: return "auto";
    case Engine::kBruteForce: return "bruteforce";
    case Engine::kDecomposition: return "decomposition";
  }
  return "?";
}

CoeffVector coeffs_bruteforce(const LabeledGraph& g) {
  const int m = g.num_edges();
  if (m > 28) throw budget_error("bruteforce engine guarded to m <= 28");

  // Compress to vertices that carry edges, plus the targets.
  std::vector<int> vmap(g.num_vertices(), -1);
  int nv = 0;
  for (int t = 0; t < 3; ++t) vmap[t] = nv++;
  std::vector<std::array<int, 2>> es;
  es.reserve(m);
  for (const auto& [u, v] : g.edges()) {
    if (vmap[u] < 0) vmap[u] = nv++;
    if (vmap[v] < 0) vmap[v] = nv++;
    es.push_back({vmap[u], vmap[v]});
  }

  std::vector<std::uint64_t> tally(m + 1, 0);
  std::vector<int> parent(nv);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const std::uint64_t end = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    for (int v = 0; v < nv; ++v) parent[v] = v;
    for (std::uint64_t rest = mask; rest;) {
      int e = std::countr_zero(rest);
      rest &= rest - 1;
      int a = find(es[e][0]), b = find(es[e][1]);
      if (a != b) parent[a] = b;
    }
    int r = find(0);
    if (r == find(1) && r == find(2)) ++tally[std::popcount(mask)];
  }

  CoeffVector out{g.num_vertices(), m, std::vector<BigInt>(m + 1)};
  for (int i = 0; i <= m; ++i) out.counts[i] = tally[i];
  return out;
}

namespace {

// Polynomial in subset size j; index = j.
using Poly = std::vector<BigInt>;

void sub_product(Poly& acc, const Poly& a, int binom_n) {
  // acc -= a(x) * sum_k C(binom_n,k) x^k
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    for (int k = 0; k <= binom_n; ++k) acc[j + k] -= a[j] * binomial(binom_n, k);
  }
}

}  // namespace

CoeffVector coeffs_decomposition(const LabeledGraph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (n > 16) throw budget_error("decomposition engine guarded to n <= 16");

  // e_in[S] = number of edges inside vertex mask S.
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<int> e_in(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int v = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    e_in[s] = e_in[rest] + std::popcount(static_cast<std::uint32_t>(g.adjacency_mask(v)) & rest);
  }

  // conn[S] for masks containing vertex 0: conn[S][j] = number of j-edge
  // spanning connected subgraphs of G[S]. Bottom-up over submask order.
  std::vector<Poly> conn(std::size_t{1} << n);
  for (std::uint32_t s = 1; s <= full; s += 2) {
    int e = e_in[s];
    Poly poly(e + 1);
    for (int j = 0; j <= e; ++j) poly[j] = binomial(e, j);
    std::uint32_t rest = s ^ 1u;
    if (rest) {
      std::uint32_t sub = rest;
      do {
        sub = (sub - 1) & rest;
        const std::uint32_t piece = sub | 1u;  // proper subset holding vertex 0
        sub_product(poly, conn[piece], e_in[s & ~piece]);
      } while (sub != 0);
    }
    conn[s] = std::move(poly);
  }

  CoeffVector out{n, m, std::vector<BigInt>(m + 1)};
  const std::uint32_t nont = full & ~0b111u;
  std::uint32_t sub = nont;
  while (true) {
    const std::uint32_t w = sub | 0b111u;
    const Poly& pw = conn[w];
    const int eo = e_in[full & ~w];
    for (size_t j = 0; j < pw.size(); ++j) {
      if (pw[j] == 0) continue;
      const int hi = std::min<int>(m, static_cast<int>(j) + eo);
      for (int i = static_cast<int>(j); i <= hi; ++i)
        out.counts[i] += pw[j] * binomial(eo, i - static_cast<int>(j));
    }
    if (sub == 0) break;
    sub = (sub - 1) & nont;
  }
  return out;
}

CoeffVector coeffs(const LabeledGraph& g, Engine engine) {
  switch (engine) {
    case Engine::kBruteForce: return coeffs_bruteforce(g);
    case Engine::kDecomposition: return coeffs_decomposition(g);
    case Engine::kAuto:
      if (g.num_vertices() <= 16) return coeffs_decomposition(g);
      if (g.num_edges() <= 28) return coeffs_bruteforce(g);
      throw budget_error("no engine fits: n > 16 and m > 28");
  }
  throw std::invalid_argument("bad engine");
}

void validate_coeff_invariants(const CoeffVector& v) {
  if (static_cast<int>(v.counts.size()) != v.m + 1)
    throw std::logic_error("coefficient vector has wrong length");
  for (int i = 0; i <= v.m; ++i) {
    if (v.counts[i] < 0 || v.counts[i] > binomial(v.m, i))
      throw std::logic_error("N_" + std::to_string(i) + " outside [0, C(m,i)]");
  }
  for (int i = 0; i < v.m; ++i) {
    if (BigInt(i + 1) * v.counts[i + 1] < BigInt(v.m - i) * v.counts[i])
      throw std::logic_error("superset inequality fails at i=" + std::to_string(i));
  }
  if (v.m >= 0 && v.counts[v.m] > 1) throw std::logic_error("N_m must be 0 or 1");
}

BigRat evaluate(const CoeffVector& v, const BigRat& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1]");
  const BigRat q = BigRat(1) - p;
  BigRat acc = 0;
  BigRat pi = 1;
  std::vector<BigRat> qpow(v.m + 1);
  qpow[0] = 1;
  for (int i = 1; i <= v.m; ++i) qpow[i] = qpow[i - 1] * q;
  for (int i = 0; i <= v.m; ++i) {
    if (v.counts[i] != 0) acc += BigRat(v.counts[i]) * pi * qpow[v.m - i];
    pi *= p;
  }
  return acc;
}

nlohmann::json coeffs_to_json(const CoeffVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 2; i <= v.m; ++i) arr.push_back(to_decimal(v.counts[i]));
  return {{"n", v.n}, {"m", v.m}, {"N", arr}};
}

CoeffVector coeffs_from_json(const nlohmann::json& j) {
  CoeffVector v;
  v.n = j.at("n").get<int>();
  v.m = j.at("m").get<int>();
  const auto& arr = j.at("N");
  if (static_cast<int>(arr.size()) != std::max(0, v.m - 1))
    throw std::invalid_argument("N array must cover i=2..m");
  v.counts.assign(v.m + 1, 0);
  for (int i = 2; i <= v.m; ++i) v.counts[i] = bigint_from_decimal(arr[i - 2].get<std::string>());
  return v;
}

std::string coeffs_to_csv(const CoeffVector& v) {
  std::ostringstream os;
  os << "i,N_i\n";
  for (int i = 2; i <= v.m; ++i) os << i << "," << to_decimal(v.counts[i]) << "\n";
  return os.str();
}

}  // namespace ttr
