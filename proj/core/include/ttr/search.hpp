#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ttr/canonical.hpp"
#include "ttr/coeffs.hpp"
#include "ttr/compare.hpp"
#include "ttr/graph.hpp"

namespace ttr {

class CoeffCache;

struct SearchOptions {
  std::uint64_t budget = 1'000'000;
  Engine engine = Engine::kAuto;
  CoeffCache* cache = nullptr;
};

enum class End { kZero, kOne };

// Best class of G_{n,m} under the end order; unique means strictly better
// than every other class.
struct LocalOptResult {
  End end = End::kZero;
  int n = 0, m = 0;
  std::size_t num_classes = 0;
  bool unique = false;
  LabeledGraph winner;
  CanonicalKey winner_key;
  CoeffVector winner_coeffs;
};

LocalOptResult find_local_opt(int n, int m, End end, const SearchOptions& opts = {});

// Whole-interval comparison across G_{n,m}: kUniformBest when one class
// coefficient-dominates every other (hence beats them at every p), kNone
// when a certified crossing rules any uniform winner out, kInconclusive when
// neither certificate was produced.
enum class UmrgStatus { kUniformBest, kNone, kInconclusive };

struct UmrgResult {
  UmrgStatus status = UmrgStatus::kInconclusive;
  std::size_t num_classes = 0;
  std::optional<CanonicalKey> best;  // near-0 winner; the uniform best when certified
  std::optional<std::pair<CanonicalKey, CanonicalKey>> crossing_pair;
  std::optional<CrossingInterval> crossing;
};

UmrgResult find_umrg(int n, int m, const SearchOptions& opts = {});

// Maximum number of 2-edge paths over plain unlabeled n-vertex m-edge
// graphs, with the count of attaining classes and whether the star K_{1,m}
// (plus isolated vertices) and the triangle attain it.
struct PathCountSearch {
  int n = 0, m = 0;
  std::uint64_t max_p3 = 0;
  std::size_t achievers = 0;
  bool star_achieves = false;
  bool triangle_achieves = false;
};

PathCountSearch max_p3_search(int n, int m, std::uint64_t budget = 1'000'000);

}  // namespace ttr
