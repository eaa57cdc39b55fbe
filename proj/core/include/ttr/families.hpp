#pragma once

#include <string_view>

#include "ttr/graph.hpp"

namespace ttr {

// Dense benchmark families. All are K_n minus a small deleted set placed on
// non-target vertices except X_n/Y_n, which delete a target-incident edge.
// Vertex names v1..vn map to indices 0..n-1; the targets are v1,v2,v3.

// K_n minus the star {v4v5, v4v6, ..., v4 v_{l+4}}; n >= 7, 2 <= l <= n-4.
LabeledGraph family_A(int n, int l);
// K_n minus the triangle {v4v5, v4v6, v5v6}; n >= 7.
LabeledGraph family_Astar(int n);
// K_n minus the matching {v4v5, v6v7, ...}; n >= 7, 2 <= l <= (n-3)/2.
LabeledGraph family_Aprime(int n, int l);

// K_n minus one edge: rs for X, r v4 for Y, v4v5 for Z. n >= 5; X and Y also
// accept n = 4 (with a stderr warning), Z cannot exist at n = 4.
LabeledGraph family_X(int n);
LabeledGraph family_Y(int n);
LabeledGraph family_Z(int n);

// Constructs by CLI family name: A, Astar, Aprime, X, Y, Z, Kn.
// l is ignored by families that do not take it.
LabeledGraph family_by_name(std::string_view name, int n, int l = -1);

}  // namespace ttr
