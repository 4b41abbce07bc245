#include "limrel/abelian_group.hpp"
#include "limrel/antisymmetric.hpp"
#include "limrel/smith.hpp"

#include <doctest.h>

#include <random>

using namespace limrel;

TEST_CASE("smith normal form of small matrices") {
  const SnfResult s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(s.diagonal == std::vector<Integer>{2, 4});
  CHECK(s.U * IntMatrix{{2, 4}, {6, 8}} * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);

  CHECK(smith_normal_form(IntMatrix::identity(4)).D.is_identity());
  const SnfResult z = smith_normal_form(IntMatrix(3, 2));
  CHECK(z.D.is_zero());
  CHECK(z.rank() == 0);
}

TEST_CASE("invariant factors are unchanged by unimodular pre- and post-composition") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9), shear(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m(5, 4);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = entry(rng);
    IntMatrix left = IntMatrix::identity(5), right = IntMatrix::identity(4);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = r + 1; c < 5; ++c) left(r, c) = shear(rng);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < r; ++c) right(r, c) = shear(rng);
    CHECK(invariant_factors(left * m * right) == invariant_factors(m));
  }
}

TEST_CASE("intermediate growth stays exact") {
  IntMatrix m(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = Integer(1) << static_cast<unsigned>(10 * (r + 1) * (c + 1) % 97);
  const SnfResult s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  Integer product = 1;
  for (const auto& d : s.diagonal) product *= d;
  if (s.rank() == 6) CHECK(product == abs(determinant(m)));
}

TEST_CASE("homology_at") {
  CHECK(homology_at(IntMatrix{{2}}, IntMatrix(0, 1)) == FinAbGroup::cyclic(2));
  CHECK(homology_at(IntMatrix(3, 0), IntMatrix(0, 3)) == FinAbGroup::free(3));
  CHECK(homology_at(IntMatrix{{1}, {1}}, IntMatrix{{1, -1}}).is_trivial());
  CHECK_THROWS_AS(homology_at(IntMatrix{{1}, {1}}, IntMatrix{{1, 1}}), InvariantViolation);
}

TEST_CASE("dualities") {
  CHECK(dual_vee(parse_group("Z^2+Z/4")) == FinAbGroup::free(2));
  CHECK(dual_vee(FinAbGroup()).is_trivial());
  const IntMatrix m{{1, 2, 3}, {4, 5, 6}};
  CHECK(dual_vee(m) == m.transpose());
  CHECK(dual_vee(dual_vee(m)) == m);
  CHECK(dual_diamond(parse_group("Z/4+Z/12")) == parse_group("Z/4+Z/12"));
  CHECK(dual_diamond(FinAbGroup::free(3)).is_trivial());
  CHECK(dual_diamond(parse_group("Z+Z/2")) == FinAbGroup::cyclic(2));
}

TEST_CASE("group literals") {
  CHECK(parse_group("Z^2+Z/4").to_string() == "Z^2+Z/4");
  CHECK(parse_group(" Z / 2 + Z/3 ") == FinAbGroup::cyclic(6));
  CHECK(parse_group("Z/2+Z/4+Z/2").torsion() == std::vector<Integer>{2, 2, 4});
  CHECK(parse_group("Z/1").is_trivial());
  CHECK(parse_group("0").is_trivial());
  CHECK(parse_group("Z^0+Z").free_rank() == 1);
  for (const char* bad : {"", "Z/0", "Q", "Z^", "Z+", "Z/-3", "Z/2 Z"}) CHECK_THROWS_AS(parse_group(bad), ParseError);
  try {
    parse_group("Z+Q");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("normal forms of presentations") {
  const PresentedGroup p(2, IntMatrix{{2, 0}, {4, 6}});
  CHECK(p.normal_form() == parse_group("Z/2+Z/6"));
  CHECK(p.with_redundant_relators(IntMatrix{{3}, {-5}}).normal_form() == p.normal_form());
  CHECK(p.with_extra_generators(3).normal_form() == p.normal_form());
  CHECK(PresentedGroup::standard(parse_group("Z+Z/2")).normal_form() == parse_group("Z+Z/2"));
  CHECK_THROWS_AS(FinAbGroup::from_invariants(0, {4, 2}), std::invalid_argument);
}

TEST_CASE("antisymmetric powers and ASK") {
  CHECK(antisym_power(2, FinAbGroup::free(1)) == FinAbGroup::cyclic(2));
  CHECK(antisym_power(2, FinAbGroup::free(2)) == parse_group("Z+Z/2+Z/2"));
  CHECK(antisym_power(3, FinAbGroup::free(1)) == FinAbGroup::cyclic(2));
  CHECK(ask_power(2, FinAbGroup::free(2)) == parse_group("Z/2+Z/2"));
  CHECK(ask_power(2, FinAbGroup::free(1)) == FinAbGroup::cyclic(2));
  CHECK(ask_power(2, FinAbGroup()).is_trivial());
  for (const char* a : {"Z", "Z^2", "Z^3", "Z/4", "Z+Z/2", "Z/3+Z/9"})
    for (int d = 2; d <= 3; ++d) CHECK(ask_power(d, parse_group(a)).annihilated_by(2));
}

TEST_CASE("induced maps descend to the antisymmetric quotient") {
  const IntMatrix f{{1, 2}, {0, 3}, {-1, 1}};
  CHECK_NOTHROW(antisym_induced_map(2, f));
  CHECK_NOTHROW(antisym_induced_map(3, f));
}
