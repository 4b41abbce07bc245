#include "limrel/abelian_group.hpp"
#include "limrel/functor.hpp"

#include <doctest.h>

#include <random>

using namespace limrel;

namespace {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

std::vector<PolyFunctor> all_families(int d) {
  return {PolyFunctor::tensor_power(d), PolyFunctor::sym_power(d), PolyFunctor::ext_power(d),
          PolyFunctor::divided_power(d), PolyFunctor::kuhn_dual(PolyFunctor::tensor_power(d))};
}

}  // namespace

TEST_CASE("basic values of the functor families") {
  CHECK(PolyFunctor::sym_power(2).apply_map(IntMatrix{{2}}) == IntMatrix{{4}});
  const IntMatrix m{{3, 1}, {5, 2}};
  CHECK(PolyFunctor::ext_power(2).apply_map(m) == IntMatrix{{determinant(m).get_si()}});
  CHECK(PolyFunctor::tensor_power(2).rank_at(3) == 9);
  CHECK(PolyFunctor::divided_power(2).apply_map(IntMatrix{{2}}) == IntMatrix{{4}});
  CHECK(PolyFunctor::divided_power(3).rank_at(2) == 4);
  CHECK(PolyFunctor::kuhn_dual(PolyFunctor::sym_power(2)).rank_at(2) == 3);
}

TEST_CASE("symmetric square of a 2x2 matrix by hand") {
  // basis x², xy, y²; x ↦ a x + c y, y ↦ b x + d y
  const IntMatrix m{{1, 2}, {3, 4}};
  const IntMatrix expected{{1, 2, 4}, {6, 10, 16}, {9, 12, 16}};
  CHECK(PolyFunctor::sym_power(2).apply_map(m) == expected);
  CHECK(PolyFunctor::divided_power(2).apply_map(m.transpose()) == expected.transpose());
}

TEST_CASE("rank identities and label counts") {
  for (int d = 1; d <= 3; ++d)
    for (std::size_t n = 0; n <= 4; ++n) {
      const long long nn = static_cast<long long>(n);
      long long tensor = 1;
      for (int k = 0; k < d; ++k) tensor *= nn;
      CHECK(PolyFunctor::tensor_power(d).rank_at(n) == static_cast<std::size_t>(tensor));
      CHECK(PolyFunctor::sym_power(d).rank_at(n) == static_cast<std::size_t>(binomial(nn + d - 1, d)));
      CHECK(PolyFunctor::ext_power(d).rank_at(n) == static_cast<std::size_t>(binomial(nn, d)));
      CHECK(PolyFunctor::divided_power(d).rank_at(n) == PolyFunctor::sym_power(d).rank_at(n));
      for (const auto& f : all_families(d)) CHECK(f.basis_at(n).size() == f.rank_at(n));
    }
}

TEST_CASE("exponential property of symmetric powers") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (int d = 1; d <= 3; ++d) {
        std::size_t sum = 0;
        for (int i = 0; i <= d; ++i) {
          const std::size_t left = i == 0 ? 1 : PolyFunctor::sym_power(i).rank_at(a);
          const std::size_t right = d - i == 0 ? 1 : PolyFunctor::sym_power(d - i).rank_at(b);
          sum += left * right;
        }
        CHECK(PolyFunctor::sym_power(d).rank_at(a + b) == sum);
      }
}

TEST_CASE("functoriality on random composable pairs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(0, 4);
  for (int d = 1; d <= 3; ++d)
    for (const auto& f : all_families(d))
      for (int trial = 0; trial < 8; ++trial) {
        const std::size_t a = static_cast<std::size_t>(dim(rng)), b = static_cast<std::size_t>(dim(rng)),
                          c = static_cast<std::size_t>(dim(rng) % 3);
        const IntMatrix m = random_matrix(rng, a, b), n = random_matrix(rng, b, c);
        CHECK(f.apply_map(m * n) == f.apply_map(m) * f.apply_map(n));
        CHECK(f.apply_map(IntMatrix::identity(a)).is_identity());
      }
}

TEST_CASE("Kuhn duality") {
  std::mt19937_64 rng(5);
  for (int d = 1; d <= 3; ++d)
    for (const auto& f : all_families(d)) {
      const IntMatrix m = random_matrix(rng, 3, 2);
      const PolyFunctor dual = PolyFunctor::kuhn_dual(f);
      CHECK(PolyFunctor::kuhn_dual(dual).apply_map(m) == f.apply_map(m));
      CHECK(dual.apply_map(m) == f.apply_map(m.transpose()).transpose());
      CHECK(PolyFunctor::divided_power(d).apply_map(m) ==
            PolyFunctor::sym_power(d).apply_map(m.transpose()).transpose());
      for (std::size_t n = 0; n <= 4; ++n)
        CHECK(PolyFunctor::kuhn_dual(PolyFunctor::ext_power(d)).rank_at(n) == PolyFunctor::ext_power(d).rank_at(n));
    }
}

TEST_CASE("functor literals") {
  CHECK(parse_functor("sym:3").name() == "sym:3");
  CHECK(parse_functor("gamma:2").degree() == 2);
  CHECK(parse_functor("dual(ext:2)").rank_at(3) == 3);
  CHECK(parse_functor("dual(dual(tensor:2))").rank_at(2) == 4);
  for (const char* bad : {"", "sym", "sym:", "sym:0", "foo:2", "dual(sym:2", "sym:2x"})
    CHECK_THROWS_AS(parse_functor(bad), ParseError);
  CHECK_THROWS_AS(PolyFunctor::sym_power(0), std::invalid_argument);
}

TEST_CASE("shape mismatches are rejected") {
  CHECK_THROWS(IntMatrix(2, 3) * IntMatrix(2, 3));
}
