#include "limrel/relation.hpp"
#include "limrel/simplicial.hpp"

#include <doctest.h>

using namespace limrel;

namespace {

CosimplicialModule constant_cosimplicial(std::size_t rank, std::size_t top) {
  CosimplicialModule v;
  v.ranks.assign(top + 1, rank);
  v.cofaces.resize(top);
  v.codegeneracies.resize(top + 1);
  for (std::size_t n = 0; n < top; ++n) v.cofaces[n].assign(n + 2, IntMatrix::identity(rank));
  for (std::size_t n = 1; n <= top; ++n) v.codegeneracies[n].assign(n, IntMatrix::identity(rank));
  return v;
}

ChainComplex in_degree(std::size_t degree, std::size_t rank) {
  std::vector<std::size_t> ranks(degree + 1, 0);
  ranks[degree] = rank;
  std::vector<IntMatrix> diffs;
  for (std::size_t n = 1; n <= degree; ++n) diffs.emplace_back(ranks[n - 1], ranks[n]);
  return ChainComplex(ranks, diffs);
}

}  // namespace

TEST_CASE("constant cosimplicial module") {
  const auto v = constant_cosimplicial(2, 4);
  CHECK(v.identity_failures().empty());
  const CochainComplex c = nonnormalized_cochain(v);
  CHECK(c.differential(0).is_zero());
  CHECK(c.differential(1).is_identity());
  CHECK(c.differential(2).is_zero());
  const CochainComplex n = normalized_cochain(v);
  CHECK(n.rank(0) == 2);
  for (std::size_t k = 1; k <= 4; ++k) CHECK(n.rank(k) == 0);
}

TEST_CASE("DK of a map") {
  const IntMatrix two{{2}};
  const auto v = dk_of_map(two, 5);
  CHECK(v.ranks == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
  CHECK(v.identity_failures().empty());
  CHECK(dk_of_map(IntMatrix::identity(1), 5).identity_failures().empty());
  CHECK(dk_of_map(IntMatrix(1, 0), 4).ranks == std::vector<std::size_t>{0, 1, 2, 3, 4});

  const CochainComplex n = normalized_cochain(v);
  CHECK(n.rank(0) == 1);
  CHECK(n.rank(1) == 1);
  CHECK(n.rank(2) == 0);
  CHECK((n.differential(0) == two || n.differential(0) == -two));
  CHECK(n.cohomology(1) == FinAbGroup::cyclic(2));
  CHECK(nonnormalized_cochain(v).cohomology(1) == FinAbGroup::cyclic(2));
}

TEST_CASE("order surjections") {
  CHECK(order_surjections(0).size() == 1);
  CHECK(order_surjections(2).size() == 4);
  CHECK(order_surjections(4).size() == 16);
}

TEST_CASE("DK of chain complexes") {
  const auto k1 = dk_chain(in_degree(1, 2), 4);
  CHECK(k1.ranks == std::vector<std::size_t>{0, 2, 4, 6, 8});
  CHECK(k1.identity_failures().empty());
  const ChainComplex n = normalized_chain(k1);
  CHECK(n.rank(1) == 2);
  for (std::size_t k = 2; k <= 4; ++k) CHECK(n.rank(k) == 0);
  CHECK(n.homology(1) == FinAbGroup::free(2));
  CHECK(n.homology(0).is_trivial());
  CHECK(n.homology(2).is_trivial());

  const auto k0 = dk_chain(in_degree(0, 3), 3);
  CHECK(k0.ranks == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(normalized_chain(k0).rank(1) == 0);

  const ChainComplex two({1, 1}, {IntMatrix{{-2}}});
  const auto s = dk_chain(two, 4);
  CHECK(s.identity_failures().empty());
  CHECK(normalized_chain(s).homology(0) == FinAbGroup::cyclic(2));
  CHECK(nonnormalized_chain(s).homology(0) == FinAbGroup::cyclic(2));
  CHECK(nonnormalized_chain(s).homology(1).is_trivial());
}

TEST_CASE("levelwise functors keep the identities and the homotopy") {
  const auto s = apply_levelwise(PolyFunctor::divided_power(2), dk_chain(in_degree(1, 1), 4));
  CHECK(s.identity_failures().empty());
  const ChainComplex full = nonnormalized_chain(s), norm = normalized_chain(s);
  for (std::size_t n = 0; n < 4; ++n) CHECK(full.homology(n) == norm.homology(n));
  // L_1 Γ²(Z, 1) = Z/2 and L_2 Γ²(Z, 1) = Λ²(Z) = 0
  CHECK(norm.homology(1) == FinAbGroup::cyclic(2));
  CHECK(norm.homology(2).is_trivial());
}

TEST_CASE("relation cosimplicial module and θ") {
  const Surjection sum(IntMatrix{{1, 1}}, PresentedGroup(1, IntMatrix(1, 0)));
  const auto r = relation_cosimplicial(sum, 4);
  CHECK(r.module.identity_failures().empty());
  for (std::size_t n = 0; n <= 4; ++n) CHECK((r.theta[n] * r.theta_inverse[n]).is_identity());

  const Surjection z4(PresentedGroup::standard(FinAbGroup::cyclic(4)));
  const auto q = relation_cosimplicial(z4, 4);
  const auto dk = dk_of_map(q.phi, 4);
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t i = 0; i <= n + 1; ++i) CHECK(q.theta[n + 1] * q.module.cofaces[n][i] == dk.cofaces[n][i] * q.theta[n]);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t i = 0; i < n; ++i)
      CHECK(q.theta[n - 1] * q.module.codegeneracies[n][i] == dk.codegeneracies[n][i] * q.theta[n]);

  const Surjection free(PresentedGroup::standard(FinAbGroup::free(2)));
  CHECK(free.relation_embedding().cols() == 0);
  const auto f = relation_cosimplicial(free, 3);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(f.module.ranks[n] == 2 * n);
}

TEST_CASE("non-surjective maps are rejected") {
  CHECK_THROWS_AS(Surjection(IntMatrix{{2}}, PresentedGroup(1, IntMatrix(1, 0))), std::invalid_argument);
}
