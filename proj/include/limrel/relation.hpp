#pragma once

#include "limrel/abelian_group.hpp"
#include "limrel/simplicial.hpp"

#include <vector>

namespace limrel {

/// A presentation p: F = Z^n ↠ A of a group A given itself by a presentation.
class Surjection {
 public:
  /// Throws std::invalid_argument if `map` is not onto `target`.
  Surjection(IntMatrix map, PresentedGroup target);
  /// The tautological Z^generators ↠ coker(relations).
  explicit Surjection(const PresentedGroup& target);

  [[nodiscard]] const IntMatrix& map() const noexcept { return map_; }
  [[nodiscard]] const PresentedGroup& target() const noexcept { return target_; }
  [[nodiscard]] std::size_t free_rank() const noexcept { return map_.cols(); }

  /// Basis of R = Ker(p) as columns: the embedding φ_p: R -> F.
  [[nodiscard]] const IntMatrix& relation_embedding() const noexcept { return relations_; }

 private:
  IntMatrix map_;
  PresentedGroup target_;
  IntMatrix relations_;
};

/// R_A(p^•): level n is Ker(p^{⊔ n+1}: F^{n+1} -> A) in a fixed basis, with
/// insert-zero cofaces and add-adjacent codegeneracies, together with the
/// isomorphisms θ_n onto DK^•(φ_p) (partial sums).
struct RelationCosimplicial {
  CosimplicialModule module;
  std::vector<IntMatrix> kernel_bases;  // F^{n+1} x rank, columns a basis of level n
  std::vector<IntMatrix> theta;         // level n -> F^n ⊕ R
  std::vector<IntMatrix> theta_inverse; // F^n ⊕ R -> level n
  IntMatrix phi;                        // φ_p: R -> F
};

RelationCosimplicial relation_cosimplicial(const Surjection& p, std::size_t top);

}  // namespace limrel
