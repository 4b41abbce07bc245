#include "limrel/cross_effects.hpp"
#include "limrel/smith.hpp"

#include <doctest.h>

using namespace limrel;

TEST_CASE("cross effect ranks") {
  CHECK(cross_effect(PolyFunctor::sym_power(2), {1, 1}).rank() == 1);
  CHECK(cross_effect(PolyFunctor::sym_power(3), {1, 1}).rank() == 2);
  CHECK(cross_effect(PolyFunctor::sym_power(3), {2, 0, 1}).rank() == 0);
  CHECK(cross_effect(PolyFunctor::tensor_power(2), {1, 1}).rank() == 2);
  CHECK(cross_effect(PolyFunctor::ext_power(2), {1, 1}).rank() == 1);
  CHECK(cross_effect(PolyFunctor::ext_power(2), {1}).rank() == 0);
  CHECK_THROWS_AS(cross_effect(PolyFunctor::sym_power(2), {}), std::invalid_argument);
}

TEST_CASE("a single block is the whole functor") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto s = cross_effect(PolyFunctor::divided_power(2), {n});
    CHECK(s.rank() == PolyFunctor::divided_power(2).rank_at(n));
  }
}

TEST_CASE("the idempotent path agrees with the label path") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& f : {PolyFunctor::tensor_power(d), PolyFunctor::sym_power(d), PolyFunctor::ext_power(d),
                          PolyFunctor::divided_power(d)})
      for (const std::vector<std::size_t>& parts :
           {std::vector<std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {2, 1, 1}}) {
        const auto fast = cross_effect(f, parts, CrossEffectMethod::Labels);
        const auto slow = cross_effect(f, parts, CrossEffectMethod::Idempotent);
        CHECK(same_column_lattice(fast.embedding, slow.embedding));
        CHECK((slow.projection * slow.embedding).is_identity());
        const IntMatrix e = slow.embedding * slow.projection;
        CHECK(e * e == e);
      }
}

TEST_CASE("decomposition into sub-tuple cross effects") {
  CHECK(decomposition_check(PolyFunctor::sym_power(2), {1, 1}));
  CHECK(decomposition_check(PolyFunctor::tensor_power(2), {1, 1, 1}));
  CHECK(decomposition_check(PolyFunctor::divided_power(3), {2, 1}));
  CHECK(decomposition_check(PolyFunctor::ext_power(3), {1, 2, 1}));
}

TEST_CASE("polynomial degree is where cross effects vanish") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& f : {PolyFunctor::tensor_power(d), PolyFunctor::sym_power(d), PolyFunctor::ext_power(d),
                          PolyFunctor::divided_power(d)}) {
      CHECK(cross_effect(f, std::vector<std::size_t>(static_cast<std::size_t>(d) + 1, 1)).rank() == 0);
      CHECK(cross_effect(f, std::vector<std::size_t>(static_cast<std::size_t>(d) + 1, 1),
                         CrossEffectMethod::Idempotent)
                .rank() == 0);
    }
  CHECK(cross_effect(PolyFunctor::sym_power(3), {1, 1, 1}).rank() == 1);
}

TEST_CASE("kernel intersection") {
  CHECK(kernel_intersection(PolyFunctor::sym_power(2), {1, 1}).summand.rank() == 2);
  CHECK(kernel_intersection(PolyFunctor::tensor_power(1), {1, 1}).summand.rank() == 1);
  CHECK(kernel_intersection(PolyFunctor::ext_power(2), {1, 1}).summand.rank() == 1);
  const auto k = kernel_intersection(PolyFunctor::divided_power(3), {1, 2, 1});
  CHECK(k.kernel_basis == k.summand.embedding * k.change_of_basis);
}

TEST_CASE("restrict_map fast path matches the general composite") {
  const PolyFunctor f = PolyFunctor::sym_power(3);
  const auto source = cross_effect(f, {1, 1});
  const auto target = cross_effect(f, {1, 1, 1});
  const IntMatrix m{{1, 0}, {1, 0}, {2, 1}};
  CHECK(restrict_map(f, target, m, source) == target.projection * f.apply_map(m) * source.embedding);
}
