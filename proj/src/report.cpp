#include "limrel/report.hpp"

namespace limrel {

nlohmann::json group_to_json(const FinAbGroup& g) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const Integer& d : g.torsion()) {
    if (d.fits_slong_p())
      torsion.push_back(d.get_si());
    else
      torsion.push_back(d.get_str());
  }
  return {{"free_rank", g.free_rank()}, {"torsion", torsion}};
}

FinAbGroup group_from_json(const nlohmann::json& j) {
  try {
    std::vector<Integer> torsion;
    for (const auto& d : j.at("torsion"))
      torsion.emplace_back(d.is_string() ? Integer(d.get<std::string>()) : Integer(d.get<long>()));
    return FinAbGroup::from_invariants(j.at("free_rank").get<std::size_t>(), std::move(torsion));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed group record: ") + e.what(), 0);
  }
}

nlohmann::json groups_to_json(const std::vector<FinAbGroup>& groups, std::size_t first_index) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    nlohmann::json row = group_to_json(groups[k]);
    row["i"] = first_index + k;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<FinAbGroup> groups_from_json(const nlohmann::json& results) {
  if (!results.is_array()) throw ParseError("results must be an array", 0);
  std::vector<FinAbGroup> out;
  for (const auto& row : results) out.push_back(group_from_json(row));
  return out;
}

}  // namespace limrel
