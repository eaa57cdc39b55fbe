#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ttr/graph.hpp"

namespace ttr {

// Text form: "n=<int>; deleted=<u-v,u-v,...>" (relative to K_n) or
// "[n=<int>; ]edges=<u-v,...>" (absolute; n defaults to max endpoint + 1).
LabeledGraph graph_from_text(std::string_view text);
std::string graph_to_text(const LabeledGraph& g);

// JSON form: {"n": int, "edges": [[u,v],...]}.
nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

// Accepts, in order of trial: family shorthand "NAME:n[:l]" with NAME in
// {A, Astar, Aprime, X, Y, Z, Kn}; "@path" to a .json or text file; and the
// two inline forms above.
LabeledGraph graph_from_spec(std::string_view spec);

}  // namespace ttr
