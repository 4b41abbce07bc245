#include "limrel/derived.hpp"
#include "limrel/limits.hpp"
#include "limrel/report.hpp"

#include <doctest.h>

using namespace limrel;

TEST_CASE("group lists round-trip through JSON text") {
  const std::vector<FinAbGroup> groups{FinAbGroup(), parse_group("Z^2+Z/4"), parse_group("Z/2+Z/6+Z/6"),
                                       FinAbGroup::cyclic(Integer("123456789012345678901234567890"))};
  const std::string text = nlohmann::json{{"results", groups_to_json(groups)}}.dump();
  const auto parsed = nlohmann::json::parse(text);
  CHECK(groups_from_json(parsed.at("results")) == groups);
  CHECK(parsed.at("results")[1].at("i") == 1);
  CHECK(parsed.at("results")[2].at("torsion") == nlohmann::json::array({2, 6, 6}));

  const auto lim = limits_free(PolyFunctor::sym_power(3), 3, 4);
  CHECK(groups_from_json(nlohmann::json::parse(groups_to_json(lim).dump())) == lim);
}

TEST_CASE("malformed records are parse errors") {
  CHECK_THROWS_AS(groups_from_json(nlohmann::json::object()), ParseError);
  CHECK_THROWS_AS(groups_from_json(nlohmann::json::parse(R"([{"free_rank": 1}])")), ParseError);
  CHECK_THROWS_AS(groups_from_json(nlohmann::json::parse(R"([{"free_rank": 0, "torsion": [4, 2]}])")),
                  std::invalid_argument);
}
