#pragma once

#include "limrel/integer_matrix.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace limrel {

/// Basis label of Φ(Z^n): a word of generator indices. Tensor powers use
/// arbitrary words, symmetric and divided powers nondecreasing words
/// (multisets), exterior powers strictly increasing words.
using BasisLabel = std::vector<int>;

/// A reduced polynomial endofunctor on finitely generated free abelian groups,
/// given by ranks, lexicographically ordered basis labels, and induced matrices.
///
/// Every functor built here has a weight basis: each label has a multidegree
/// with respect to any block decomposition Z^{n_1} ⊕ ... ⊕ Z^{n_k}, and
/// diagonal maps act diagonally on labels. Cross effects use this.
class PolyFunctor {
 public:
  static PolyFunctor tensor_power(int d);
  static PolyFunctor sym_power(int d);
  static PolyFunctor ext_power(int d);
  /// Γ^d, realized as the Kuhn dual of S^d.
  static PolyFunctor divided_power(int d);
  /// Φ^#(A) = Φ(A^∨)^∨: same ranks, M ↦ Φ(Mᵀ)ᵀ.
  static PolyFunctor kuhn_dual(const PolyFunctor& f);

  [[nodiscard]] const std::string& name() const;
  [[nodiscard]] int degree() const;

  [[nodiscard]] std::size_t rank_at(std::size_t n) const;
  [[nodiscard]] const std::vector<BasisLabel>& basis_at(std::size_t n) const;
  [[nodiscard]] std::size_t index_of(std::size_t n, const BasisLabel& label) const;

  /// Φ(M) for M: Z^cols -> Z^rows, a rank_at(rows) x rank_at(cols) matrix.
  [[nodiscard]] IntMatrix apply_map(const IntMatrix& m) const;
  /// The listed columns of Φ(M).
  [[nodiscard]] IntMatrix apply_columns(const IntMatrix& m, std::span<const std::size_t> columns) const;

  /// Number of indices of `label` falling in each block of `parts`.
  [[nodiscard]] static std::vector<int> multidegree(const BasisLabel& label,
                                                    std::span<const std::size_t> parts);

  struct Impl;

 private:
  explicit PolyFunctor(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// `tensor:d`, `sym:d`, `ext:d`, `gamma:d`, `dual(<functor>)`.
PolyFunctor parse_functor(std::string_view text);

}  // namespace limrel
