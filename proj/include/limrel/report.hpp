#pragma once

#include "limrel/abelian_group.hpp"

#include <json.hpp>

#include <vector>

namespace limrel {

/// {"i": i, "free_rank": r, "torsion": [d1, ...]} for each entry, i counting from `first_index`.
nlohmann::json groups_to_json(const std::vector<FinAbGroup>& groups, std::size_t first_index = 0);
/// Inverse of groups_to_json; throws ParseError on malformed input.
std::vector<FinAbGroup> groups_from_json(const nlohmann::json& results);

nlohmann::json group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const nlohmann::json& j);

}  // namespace limrel
