#include "limrel/antisymmetric.hpp"
#include "limrel/derived.hpp"
#include "limrel/limits.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace limrel;

namespace {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_CASE("derived functors of divided powers at level one") {
  for (int d = 1; d <= 3; ++d)
    for (std::size_t r = 1; r <= 3; ++r) {
      const auto l = derived(PolyFunctor::divided_power(d), FinAbGroup::free(r), 1, static_cast<std::size_t>(d)).values;
      CHECK(l[0].is_trivial());
      CHECK(l[static_cast<std::size_t>(d)] ==
            FinAbGroup::free(static_cast<std::size_t>(binomial(static_cast<long long>(r), d))));
      for (int i = 1; i < d; ++i) CHECK(l[static_cast<std::size_t>(i)].is_finite());
    }
  for (std::size_t r = 1; r <= 3; ++r)
    CHECK(derived(PolyFunctor::divided_power(3), FinAbGroup::free(r), 1, 1).values[1] ==
          direct_sum(std::vector<FinAbGroup>(r, FinAbGroup::cyclic(3))));
  CHECK(derived(PolyFunctor::divided_power(2), FinAbGroup::free(1), 1, 1).values[1] == FinAbGroup::cyclic(2));
  CHECK(derived(PolyFunctor::divided_power(2), FinAbGroup::free(1), 1, 1).values[1] ==
        dual_diamond(ask_power(2, FinAbGroup::free(1))));
}

TEST_CASE("level zero") {
  const auto l = derived(PolyFunctor::sym_power(2), FinAbGroup::free(1), 0, 3).values;
  CHECK(l[0] == FinAbGroup::free(1));
  for (std::size_t i = 1; i <= 3; ++i) CHECK(l[i].is_trivial());
  // L_0 Φ(A, 0) = Φ(A) for finite A: Γ²(Z/4) = Z/8, S²(Z/4) = Z/4
  CHECK(derived(PolyFunctor::divided_power(2), FinAbGroup::cyclic(4), 0, 0).values[0] == FinAbGroup::cyclic(8));
  CHECK(derived(PolyFunctor::sym_power(2), FinAbGroup::cyclic(4), 0, 0).values[0] == FinAbGroup::cyclic(4));
  CHECK(derived(PolyFunctor::tensor_power(1), FinAbGroup::cyclic(6), 0, 2).values ==
        std::vector<FinAbGroup>{FinAbGroup::cyclic(6), FinAbGroup(), FinAbGroup()});
}

TEST_CASE("presentation of the input does not matter") {
  const FinAbGroup a = parse_group("Z+Z/2");
  const auto standard = derived(PolyFunctor::sym_power(2), PresentedGroup::standard(a), 1, 3).values;
  const auto other = derived(PolyFunctor::sym_power(2), PresentedGroup::standard(a).with_extra_generators(2), 1, 3).values;
  CHECK(standard == other);
}

TEST_CASE("q outside {0, 1} is rejected") {
  CHECK_THROWS_AS(derived(PolyFunctor::sym_power(2), FinAbGroup::free(1), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(derived(PolyFunctor::sym_power(2), FinAbGroup::free(1), -1, 2), std::invalid_argument);
}

TEST_CASE("duality predictions") {
  CHECK(duality_predicted_limits(PolyFunctor::sym_power(2), 1, 2) ==
        std::vector<FinAbGroup>{FinAbGroup(), FinAbGroup(), FinAbGroup::cyclic(2)});
  for (int d = 2; d <= 3; ++d) {
    const auto pred = duality_predicted_limits(PolyFunctor::sym_power(d), 2, static_cast<std::size_t>(d) + 2);
    const auto l = derived(PolyFunctor::divided_power(d), FinAbGroup::free(2), 1, static_cast<std::size_t>(d)).values;
    for (int i = 1; i < d; ++i) CHECK(pred[static_cast<std::size_t>(i)] == dual_diamond(l[static_cast<std::size_t>(i) - 1]));
    CHECK(pred[static_cast<std::size_t>(d) + 1].is_trivial());
    CHECK(pred[static_cast<std::size_t>(d) + 2].is_trivial());
  }
}

TEST_CASE("torsion predictions") {
  const FinAbGroup z4 = FinAbGroup::cyclic(4);
  CHECK(torsion_predicted_limits(PolyFunctor::sym_power(2), z4, 3) ==
        limits_via_cone(PolyFunctor::sym_power(2), Surjection(PresentedGroup::standard(z4)), 3));
  const auto id = torsion_predicted_limits(PolyFunctor::tensor_power(1), parse_group("Z/2+Z/6"), 2);
  CHECK(id[1] == parse_group("Z/2+Z/6"));
  CHECK(id[0].is_trivial());
  CHECK(id[2].is_trivial());
  CHECK_THROWS_AS(torsion_predicted_limits(PolyFunctor::sym_power(2), FinAbGroup::free(1), 2), std::invalid_argument);
}

TEST_CASE("K(Z,3) homology") {
  const auto rows = k3_homology(8);
  REQUIRE(rows.size() == 5);
  const std::vector<FinAbGroup> expected = {FinAbGroup(), FinAbGroup::cyclic(2), FinAbGroup(), FinAbGroup::cyclic(3),
                                            FinAbGroup::cyclic(2)};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(rows[k].n == k + 4);
    CHECK(rows[k].total == expected[k]);
  }
  REQUIRE(rows[1].contributions.size() == 1);
  CHECK(rows[1].contributions[0].first == 2);
  CHECK(rows[3].contributions[0].first == 3);
}

TEST_CASE("derived values are stable when the truncation is raised") {
  const auto base = derived(PolyFunctor::divided_power(3), FinAbGroup::free(2), 1, 3).values;
  ::setenv("FUNCTOR_LIMITS_TRUNC_SLACK", "1", 1);
  const auto raised = derived(PolyFunctor::divided_power(3), FinAbGroup::free(2), 1, 3).values;
  ::unsetenv("FUNCTOR_LIMITS_TRUNC_SLACK");
  CHECK(base == raised);
}
