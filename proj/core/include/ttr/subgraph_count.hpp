#pragma once

#include <cstdint>
#include <string_view>

#include "ttr/graph.hpp"

namespace ttr {

// Small patterns counted among the non-target vertices only. P3 and P4 are
// paths on 3 and 4 vertices; K13 is the star with three leaves.
enum class Pattern { kP3, kP4, kK3, kK13 };

const char* pattern_name(Pattern p);
Pattern pattern_from_name(std::string_view s);  // throws std::invalid_argument

// Number of (not necessarily induced) subgraphs of g isomorphic to the
// pattern whose vertices all avoid the targets.
std::int64_t count_nontarget_subgraphs(const LabeledGraph& g, Pattern p);

}  // namespace ttr
