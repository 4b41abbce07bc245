#include "limrel/antisymmetric.hpp"
#include "limrel/limits.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>

using namespace limrel;

namespace {

std::vector<FinAbGroup> groups(std::initializer_list<const char*> literals) {
  std::vector<FinAbGroup> out;
  for (const char* l : literals) out.push_back(parse_group(l));
  return out;
}

}  // namespace

TEST_CASE("delta block forms") {
  const IntMatrix zero(2, 1);
  const IntMatrix d = delta(1, 1, zero);
  // (a, b) ↦ (a, 0, b)
  IntMatrix expected(5, 3);
  expected(0, 0) = expected(1, 1) = expected(4, 2) = 1;
  CHECK(d == expected);
  CHECK_THROWS_AS(delta(3, 2, zero), std::out_of_range);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-4, 4);
  IntMatrix phi(2, 3);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c) phi(r, c) = entry(rng);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(drop_last(n + 1, 2, 3) * delta(n, n, phi) == direct_sum(IntMatrix::identity(2 * n), phi));
    for (std::size_t j = 1; j <= n + 1; ++j)
      for (std::size_t i = 0; i < j; ++i)
        CHECK(delta(j, n + 1, phi) * delta(i, n, phi) == delta(i, n + 1, phi) * delta(j - 1, n, phi));
  }
}

TEST_CASE("h-maps for symmetric powers") {
  const PolyFunctor s2 = PolyFunctor::sym_power(2);
  const IntMatrix id = IntMatrix::identity(1);
  // S²(Z|Z) -> S²(Z|Z|Z) vanishes; S²(Z) -> S²(Z|Z): x² ↦ 2xy for h^0
  CHECK(h_map(s2, 0, 0, id) == IntMatrix{{2}});
  CHECK(h_map(s2, 0, 1, id).rows() == 0);
  const PolyFunctor s3 = PolyFunctor::sym_power(3);
  for (std::size_t n = 0; n + 1 < 3; ++n)
    for (std::size_t j = 1; j <= n + 1; ++j)
      for (std::size_t i = 0; i < j; ++i)
        CHECK(h_map(s3, j, n + 1, id) * h_map(s3, i, n, id) == h_map(s3, i, n + 1, id) * h_map(s3, j - 1, n, id));
}

TEST_CASE("the cross-effect complex") {
  const CochainComplex c = c_phi(PolyFunctor::sym_power(2), IntMatrix::identity(1), 3);
  CHECK(c.ranks() == std::vector<std::size_t>{1, 1, 0, 0});
  const CochainComplex z = c_phi(PolyFunctor::sym_power(2), IntMatrix(2, 0), 3);
  CHECK(z.rank(0) == 0);
  for (int d = 2; d <= 3; ++d)
    for (std::size_t r = 1; r <= 3; ++r)
      CHECK(c_phi(PolyFunctor::sym_power(d), IntMatrix::identity(r), static_cast<std::size_t>(d) + 1)
                .cohomology(static_cast<std::size_t>(d) - 1) == antisym_power(d, FinAbGroup::free(r)));
}

TEST_CASE("free-case limits") {
  CHECK(limits_free(PolyFunctor::sym_power(2), 1, 2) == groups({"0", "0", "Z/2"}));
  CHECK(limits_free(PolyFunctor::tensor_power(2), 1, 2) == groups({"0", "0", "Z"}));
  CHECK(limits_free(PolyFunctor::sym_power(3), 1, 4) == groups({"0", "0", "Z/3", "Z/2", "0"}));
  CHECK(limits_free(PolyFunctor::ext_power(2), 2, 3) == groups({"0", "0", "Z^3", "0"}));
  for (const auto& f : {PolyFunctor::tensor_power(3), PolyFunctor::divided_power(3), PolyFunctor::ext_power(2)}) {
    const auto lim = limits_free(f, 2, 6);
    for (std::size_t i = static_cast<std::size_t>(f.degree()) + 1; i <= 6; ++i) CHECK(lim[i].is_trivial());
  }
  for (int d = 2; d <= 3; ++d)
    for (std::size_t r = 1; r <= 3; ++r) CHECK(limits_free(PolyFunctor::sym_power(d), r, 1)[1].is_trivial());
}

TEST_CASE("cone route") {
  const PolyFunctor s2 = PolyFunctor::sym_power(2);
  const Surjection identity(PresentedGroup::standard(FinAbGroup::free(2)));
  CHECK(limits_via_cone(s2, identity, 3) == limits_free(s2, 2, 3));

  const Surjection z4(PresentedGroup::standard(FinAbGroup::cyclic(4)));
  const auto lim = limits_via_cone(s2, z4, 3);
  CHECK(lim == groups({"0", "Z/8", "Z/2", "0"}));
  CHECK(limits_via_relation_cosimplicial(s2, z4, 3) == lim);

  // Z² ↠ Z and Z³ ↠ Z
  const PresentedGroup z(1, IntMatrix(1, 0));
  for (const auto& f : {s2, PolyFunctor::sym_power(3)}) {
    const auto two = limits_via_cone(f, Surjection(IntMatrix{{1, 1}}, z), 4);
    const auto three = limits_via_cone(f, Surjection(IntMatrix{{2, 3, 0}}, z), 4);
    CHECK(two == three);
    CHECK(two == limits_free(f, 1, 4));
  }
}

TEST_CASE("cone component ranks") {
  const PolyFunctor s2 = PolyFunctor::sym_power(2);
  const Surjection p(PresentedGroup::standard(parse_group("Z+Z/2")).with_extra_generators(1));
  const LimitComplex lc = limit_complex_cone(s2, p, 3);
  CHECK(lc.route == LimitRoute::Cone);
  const std::size_t g = p.free_rank(), rr = p.relation_embedding().cols();
  for (std::size_t n = 0; n <= 3; ++n) {
    const std::size_t expected =
        mixed_cross_effect(s2, n, g, rr).rank() + (n == 0 ? 0 : mixed_cross_effect(s2, n - 1, g, g).rank());
    CHECK(lc.complex.rank(n) == expected);
  }
}

TEST_CASE("truncation slack") {
  ::unsetenv("FUNCTOR_LIMITS_TRUNC_SLACK");
  CHECK(truncation_slack() == 0);
  const auto base = limits_free(PolyFunctor::sym_power(3), 2, 4);
  ::setenv("FUNCTOR_LIMITS_TRUNC_SLACK", "2", 1);
  CHECK(truncation_slack() == 2);
  CHECK(limits_free(PolyFunctor::sym_power(3), 2, 4) == base);
  ::setenv("FUNCTOR_LIMITS_TRUNC_SLACK", "two", 1);
  CHECK_THROWS_AS(truncation_slack(), std::invalid_argument);
  ::unsetenv("FUNCTOR_LIMITS_TRUNC_SLACK");
}
