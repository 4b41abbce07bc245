#include "limrel/report.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace limrel;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(LIMREL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe)) r.out += buffer.data();
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<FinAbGroup> groups(std::initializer_list<const char*> literals) {
  std::vector<FinAbGroup> out;
  for (const char* l : literals) out.push_back(parse_group(l));
  return out;
}

nlohmann::json run_json(const std::string& args) {
  const Run r = run(args + " --format json");
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("limits subcommand") {
  const auto j = run_json("limits --functor sym:3 --group Z");
  CHECK(j.at("command") == "limits");
  CHECK(j.at("functor") == "sym:3");
  CHECK(j.at("group") == "Z");
  CHECK(j.at("route") == "free");
  CHECK(j.at("ms").is_number());
  CHECK(groups_from_json(j.at("results")) == groups({"0", "0", "Z/3", "Z/2", "0"}));

  CHECK(groups_from_json(run_json("limits --functor ext:2 --group Z^2").at("results")) ==
        groups({"0", "0", "Z^3", "0"}));

  const auto cone = run_json("limits --functor sym:2 --group Z/4");
  CHECK(cone.at("route") == "cone");
  CHECK(groups_from_json(cone.at("results")) == groups({"0", "Z/8", "Z/2", "0"}));

  const auto padded = run_json("limits --functor sym:2 --group Z --presentation-rank 2");
  CHECK(padded.at("route") == "cone");
  CHECK(groups_from_json(padded.at("results")) == groups({"0", "0", "Z/2", "0"}));

  const Run table = run("limits --functor sym:2 --group Z");
  CHECK(table.code == 0);
  CHECK(table.out.find("Z/2") != std::string::npos);
}

TEST_CASE("derived subcommand") {
  const auto g3 = groups_from_json(run_json("derived --functor gamma:3 --group Z --q 1").at("results"));
  REQUIRE(g3.size() == 5);
  CHECK(g3[0].is_trivial());
  CHECK(g3[1] == FinAbGroup::cyclic(3));
  CHECK(g3[2].is_finite());
  CHECK(g3[3].is_trivial());

  const auto g2 = groups_from_json(run_json("derived --functor gamma:2 --group Z^2 --q 1").at("results"));
  CHECK(g2[2] == FinAbGroup::free(1));

  CHECK(groups_from_json(run_json("derived --functor sym:2 --group Z --q 0").at("results")) ==
        groups({"Z", "0", "0", "0"}));
}

TEST_CASE("k3-homology subcommand") {
  const auto j = run_json("k3-homology --max-n 8");
  CHECK(groups_from_json(j.at("results")) == groups({"0", "Z/2", "0", "Z/3", "Z/2"}));
  CHECK(j.at("results")[0].at("i") == 4);
  CHECK(j.at("results")[3].at("contributions")[0].at("d") == 3);
}

TEST_CASE("verify subcommand") {
  const Run nabla = run("verify --suite nabla");
  CHECK(nabla.code == 0);
  CHECK(nabla.out.find("PASS") != std::string::npos);
  const auto j = run_json("verify --suite cross-effects --cases 20");
  CHECK(j.at("suites")[0].at("failed") == 0);
  CHECK(j.at("suites")[0].at("cases") == 20);
}

TEST_CASE("exit codes") {
  CHECK(run("limits --functor sym:2 --group Q").code == 2);
  CHECK(run("limits --functor sim:2 --group Z").code == 2);
  CHECK(run("limits --functor sym:2").code == 2);
  CHECK(run("derived --functor sym:2 --group Z --q 3").code == 2);
  CHECK(run("verify --suite nonsense").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("limits --functor sym:2 --group Z --format xml").code == 2);
}
