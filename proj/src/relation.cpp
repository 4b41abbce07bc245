#include "limrel/relation.hpp"

#include "limrel/smith.hpp"

namespace limrel {

Surjection::Surjection(IntMatrix map, PresentedGroup target)
    : map_(std::move(map)), target_(std::move(target)) {
  if (map_.rows() != target_.generators())
    throw std::invalid_argument("Surjection: map does not land in the target generators");
  if (!FinAbGroup::cokernel(hstack(map_, target_.relations())).is_trivial())
    throw std::invalid_argument("Surjection: map is not surjective");
  // R = {x : p x ∈ im(relations)}
  const IntMatrix k = kernel_basis(hstack(map_, -target_.relations()));
  relations_ = image_basis(k.block(0, 0, map_.cols(), k.cols()));
}

Surjection::Surjection(const PresentedGroup& target)
    : Surjection(IntMatrix::identity(target.generators()), target) {}

namespace {

// Block matrix acting on F^{count}: entry (a, b) = coeff * I_g.
void put_identity(IntMatrix& m, std::size_t g, std::size_t row_block, std::size_t col_block, long coeff) {
  for (std::size_t r = 0; r < g; ++r) m(row_block * g + r, col_block * g + r) = coeff;
}

}  // namespace

RelationCosimplicial relation_cosimplicial(const Surjection& p, std::size_t top) {
  const std::size_t g = p.free_rank();
  RelationCosimplicial out;
  out.phi = p.relation_embedding();
  const std::size_t rr = out.phi.cols();

  for (std::size_t n = 0; n <= top; ++n) {
    // generators of Ker(p^{⊔n+1}): a e_i - a e_n for i < n, and r e_n for r ∈ R
    IntMatrix gens((n + 1) * g, n * g + rr);
    for (std::size_t i = 0; i < n; ++i) {
      put_identity(gens, g, i, i, 1);
      for (std::size_t r = 0; r < g; ++r) gens(n * g + r, i * g + r) = -1;
    }
    gens.set_block(n * g, n * g, out.phi);
    out.kernel_bases.push_back(image_basis(gens));
    out.module.ranks.push_back(out.kernel_bases.back().cols());
  }

  out.module.cofaces.resize(top);
  for (std::size_t n = 0; n < top; ++n)
    for (std::size_t i = 0; i <= n + 1; ++i) {
      IntMatrix insert_zero((n + 2) * g, (n + 1) * g);
      for (std::size_t k = 0; k <= n; ++k) put_identity(insert_zero, g, k < i ? k : k + 1, k, 1);
      out.module.cofaces[n].push_back(solve_in_lattice_or_throw(
          out.kernel_bases[n + 1], insert_zero * out.kernel_bases[n], "relation_cosimplicial coface"));
    }

  out.module.codegeneracies.resize(top + 1);
  for (std::size_t n = 1; n <= top; ++n)
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix add_adjacent(n * g, (n + 1) * g);
      for (std::size_t k = 0; k <= n; ++k) put_identity(add_adjacent, g, k <= i ? k : k - 1, k, 1);
      out.module.codegeneracies[n].push_back(solve_in_lattice_or_throw(
          out.kernel_bases[n - 1], add_adjacent * out.kernel_bases[n], "relation_cosimplicial codegeneracy"));
    }

  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t dim = (n + 1) * g;
    IntMatrix partial_sums(dim, dim);
    for (std::size_t k = 0; k <= n; ++k)
      for (std::size_t j = 0; j <= k; ++j) put_identity(partial_sums, g, k, j, 1);
    const IntMatrix sums = partial_sums * out.kernel_bases[n];
    IntMatrix theta(n * g + rr, sums.cols());
    theta.set_block(0, 0, sums.block(0, 0, n * g, sums.cols()));
    theta.set_block(n * g, 0,
                    solve_in_lattice_or_throw(out.phi, sums.block(n * g, 0, g, sums.cols()), "theta"));
    out.theta.push_back(std::move(theta));

    // θ^{-1}(a_0, ..., a_{n-1}, r) = (a_0, a_1 - a_0, ..., φ(r) - a_{n-1})
    IntMatrix differences(dim, n * g + rr);
    for (std::size_t k = 0; k < n; ++k) {
      put_identity(differences, g, k, k, 1);
      put_identity(differences, g, k + 1, k, -1);
    }
    differences.set_block(n * g, n * g, out.phi);
    out.theta_inverse.push_back(
        solve_in_lattice_or_throw(out.kernel_bases[n], differences, "theta inverse"));
  }
  return out;
}

}  // namespace limrel
