#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ttr::detail {

bool mask_lex_less(std::uint64_t a, std::uint64_t b);
std::vector<int> slot_map(int n, const std::vector<int>& p);
const std::vector<std::vector<int>>& target_stabilizing_slot_maps(int n);
const std::vector<std::vector<int>>& full_slot_maps(int n);  // all of S_n; n <= 8
std::uint64_t apply_slot_map(std::uint64_t mask, const std::vector<int>& m);
std::string key_bytes(int n, std::uint64_t mask);
std::uint64_t canonical_mask(int n, std::uint64_t mask);

}  // namespace ttr::detail
