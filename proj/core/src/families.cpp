#include "ttr/families.hpp"

#include <iostream>
#include <stdexcept>
#include <string>

namespace ttr {

namespace {
void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

LabeledGraph family_A(int n, int l) {
  require(n >= 7, "family A needs n >= 7");
  require(l >= 2 && l <= n - 4, "family A needs 2 <= l <= n-4");
  std::vector<Edge> del;
  for (int i = 0; i < l; ++i) del.emplace_back(3, 4 + i);
  return LabeledGraph::from_complete_minus(n, del);
}

LabeledGraph family_Astar(int n) {
  require(n >= 7, "family Astar needs n >= 7");
  return LabeledGraph::from_complete_minus(n, {{3, 4}, {3, 5}, {4, 5}});
}

LabeledGraph family_Aprime(int n, int l) {
  require(n >= 7, "family Aprime needs n >= 7");
  require(l >= 2 && 2 * l <= n - 3, "family Aprime needs 2 <= l <= (n-3)/2");
  std::vector<Edge> del;
  for (int i = 0; i < l; ++i) del.emplace_back(3 + 2 * i, 4 + 2 * i);
  return LabeledGraph::from_complete_minus(n, del);
}

namespace {
void warn_small(const char* name, int n) {
  if (n == 4)
    std::cerr << "warning: " << name << "_4 is below the analyzed range n >= 5\n";
}
}  // namespace

LabeledGraph family_X(int n) {
  require(n >= 4, "family X needs n >= 4");
  warn_small("X", n);
  return LabeledGraph::from_complete_minus(n, {{0, 1}});
}

LabeledGraph family_Y(int n) {
  require(n >= 4, "family Y needs n >= 4");
  warn_small("Y", n);
  return LabeledGraph::from_complete_minus(n, {{0, 3}});
}

LabeledGraph family_Z(int n) {
  require(n >= 5, "family Z needs n >= 5 (no second non-target vertex below that)");
  return LabeledGraph::from_complete_minus(n, {{3, 4}});
}

LabeledGraph family_by_name(std::string_view name, int n, int l) {
  auto need_l = [&](const char* fam) {
    if (l < 0)
      throw std::invalid_argument(std::string("family ") + fam + " needs parameter l");
  };
  if (name == "A") {
    need_l("A");
    return family_A(n, l);
  }
  if (name == "Astar") return family_Astar(n);
  if (name == "Aprime") {
    need_l("Aprime");
    return family_Aprime(n, l);
  }
  if (name == "X") return family_X(n);
  if (name == "Y") return family_Y(n);
  if (name == "Z") return family_Z(n);
  if (name == "Kn") return LabeledGraph::complete(n);
  throw std::invalid_argument("unknown family: " + std::string(name));
}

}  // namespace ttr
