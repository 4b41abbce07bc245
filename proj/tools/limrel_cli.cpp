#include "limrel/derived.hpp"
#include "limrel/limits.hpp"
#include "limrel/report.hpp"
#include "limrel/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>

using namespace limrel;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kParseError = 2, kInvariant = 3, kVerifyFailed = 4 };

struct Options {
  std::string functor;
  std::string group;
  int q = 1;
  std::size_t max_n = 0;
  int max_degree = 3;
  std::size_t max_rank = 3;
  std::size_t presentation_rank = 0;
  std::size_t cases = 200;
  std::string format = "table";
  std::string suite = "all";
};

class Stopwatch {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void print_rows(const std::string& symbol, const std::vector<FinAbGroup>& groups) {
  std::cout << std::setw(4) << "i" << "  " << symbol << '\n';
  for (std::size_t i = 0; i < groups.size(); ++i) std::cout << std::setw(4) << i << "  " << groups[i] << '\n';
}

int cmd_limits(const Options& o) {
  const PolyFunctor f = parse_functor(o.functor);
  const FinAbGroup a = parse_group(o.group);
  const std::size_t i_max = static_cast<std::size_t>(f.degree()) + 1;
  Stopwatch clock;
  std::vector<FinAbGroup> lim;
  std::string route;
  if (a.is_free() && o.presentation_rank == 0) {
    lim = limits_free(f, a.free_rank(), i_max);
    route = "free";
  } else {
    const Surjection p(PresentedGroup::standard(a).with_extra_generators(o.presentation_rank));
    lim = limits_via_cone(f, p, i_max);
    route = "cone";
  }
  const long long ms = clock.ms();
  if (o.format == "json") {
    std::cout << nlohmann::json{{"command", "limits"}, {"functor", f.name()}, {"group", a.to_string()},
                                {"results", groups_to_json(lim)}, {"route", route}, {"ms", ms}}
                     .dump()
              << '\n';
  } else {
    std::cout << "lim^i " << f.name() << " R_" << a << "  (route: " << route << ", " << ms << " ms)\n";
    print_rows("lim^i", lim);
  }
  return kOk;
}

int cmd_derived(const Options& o) {
  const PolyFunctor f = parse_functor(o.functor);
  const FinAbGroup a = parse_group(o.group);
  const std::size_t i_max = o.max_n > 0 ? o.max_n : static_cast<std::size_t>(f.degree()) + 1;
  Stopwatch clock;
  const DerivedFunctorResult r = derived(f, a, o.q, i_max);
  const long long ms = clock.ms();
  if (o.format == "json") {
    std::cout << nlohmann::json{{"command", "derived"}, {"functor", f.name()}, {"group", a.to_string()},
                                {"q", o.q}, {"results", groups_to_json(r.values)}, {"ms", ms}}
                     .dump()
              << '\n';
  } else {
    std::cout << "L_i " << f.name() << "(" << a << ", " << o.q << ")  (" << ms << " ms)\n";
    print_rows("L_i", r.values);
  }
  return kOk;
}

int cmd_k3(const Options& o) {
  const std::size_t n_max = o.max_n > 0 ? o.max_n : 8;
  Stopwatch clock;
  const auto rows = k3_homology(n_max);
  const long long ms = clock.ms();
  if (o.format == "json") {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json entry = group_to_json(row.total);
      entry["i"] = row.n;
      nlohmann::json parts = nlohmann::json::array();
      for (const auto& [d, g] : row.contributions) {
        nlohmann::json part = group_to_json(g);
        part["d"] = d;
        parts.push_back(std::move(part));
      }
      entry["contributions"] = std::move(parts);
      results.push_back(std::move(entry));
    }
    std::cout << nlohmann::json{{"command", "k3-homology"}, {"results", results}, {"ms", ms}}.dump() << '\n';
  } else {
    std::cout << "H_n(K(Z,3); Z)  (" << ms << " ms)\n";
    for (const auto& row : rows) {
      std::cout << std::setw(4) << row.n << "  " << row.total;
      for (const auto& [d, g] : row.contributions)
        std::cout << "   [d=" << d << ": lim^" << (static_cast<int>(row.n) - 2 * d + 1) << " S^" << d << " = " << g
                  << "]";
      std::cout << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  SuiteOptions so;
  so.cases = o.cases;
  so.max_degree = o.max_degree;
  so.max_rank = o.max_rank;
  std::vector<std::string> suites;
  if (o.suite == "all")
    suites = suite_names();
  else
    suites.push_back(o.suite);

  bool all_passed = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& name : suites) {
    const SuiteReport r = run_suite(name, so);
    all_passed &= r.passed();
    if (o.format == "json") {
      out.push_back({{"suite", r.name}, {"cases", r.cases}, {"failed", r.failed}, {"failures", r.failures},
                     {"ms", r.ms}});
    } else {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(14) << r.name << std::right
                << r.cases << " cases, " << r.failed << " failed, " << r.ms << " ms\n";
      for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    }
  }
  if (o.format == "json") std::cout << nlohmann::json{{"command", "verify"}, {"suites", out}}.dump() << '\n';
  return all_passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher limits of polynomial functors over presentation categories"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };

  auto* limits = app.add_subcommand("limits", "lim^i Φ R_A for 0 ≤ i ≤ deg Φ + 1");
  limits->add_option("--functor", o.functor, "tensor:d, sym:d, ext:d, gamma:d or dual(...)")->required();
  limits->add_option("--group", o.group, "Group literal such as Z^2+Z/4")->required();
  limits->add_option("--presentation-rank", o.presentation_rank,
                     "Extra free generators in the presentation (forces the cone route)");
  add_format(limits);

  auto* derived_cmd = app.add_subcommand("derived", "Dold-Puppe derived functors L_iΦ(A, q)");
  derived_cmd->add_option("--functor", o.functor, "Functor literal")->required();
  derived_cmd->add_option("--group", o.group, "Group literal")->required();
  derived_cmd->add_option("--q", o.q, "Eilenberg-MacLane level, 0 or 1");
  derived_cmd->add_option("--max-n", o.max_n, "Largest i (default deg Φ + 1)");
  add_format(derived_cmd);

  auto* k3 = app.add_subcommand("k3-homology", "H_n(K(Z,3); Z) for 4 ≤ n ≤ max-n");
  k3->add_option("--max-n", o.max_n, "Largest n (default 8)");
  add_format(k3);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "Suite name or 'all'");
  verify->add_option("--max-degree", o.max_degree, "Largest functor degree in the criteria grid");
  verify->add_option("--max-rank", o.max_rank, "Largest free rank in the criteria grid");
  verify->add_option("--cases", o.cases, "Random cases per property suite");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*limits) return cmd_limits(o);
    if (*derived_cmd) return cmd_derived(o);
    if (*k3) return cmd_k3(o);
    return cmd_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
