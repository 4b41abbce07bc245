#pragma once

#include "limrel/functor.hpp"

#include <optional>
#include <vector>

namespace limrel {

/// The cross effect Φ(Z^{n_1} | ... | Z^{n_k}) as a direct summand of
/// Φ(Z^{n_1 + ... + n_k}): embedding ρ (ambient x rank) and projection
/// π (rank x ambient) with π·ρ = 1 and ρ·π idempotent.
struct CrossEffectSummand {
  std::vector<std::size_t> parts;
  std::size_t ambient_rank = 0;
  IntMatrix embedding;   // ρ
  IntMatrix projection;  // π
  /// Set when the summand is spanned by a subset of the ambient basis labels;
  /// then ρ and π are the corresponding coordinate inclusion and restriction.
  std::optional<std::vector<std::size_t>> label_subset;

  [[nodiscard]] std::size_t rank() const noexcept { return embedding.cols(); }
};

enum class CrossEffectMethod {
  Labels,      // basis labels with positive multidegree in every block
  Idempotent,  // image of Σ_S (−1)^{k−|S|} Φ(em_S · pr_S), extracted with Smith normal form
};

CrossEffectSummand cross_effect(const PolyFunctor& f, const std::vector<std::size_t>& parts,
                                CrossEffectMethod method = CrossEffectMethod::Labels);

/// Diagonal projection of Z^{Σ parts} onto the blocks in `keep` (em_S · pr_S).
IntMatrix block_projection(const std::vector<std::size_t>& parts, const std::vector<bool>& keep);

/// Inclusion ⊕_{i ∈ keep} Z^{n_i} -> ⊕_i Z^{n_i}.
IntMatrix block_embedding(const std::vector<std::size_t>& parts, const std::vector<bool>& keep);

/// The canonical projection pr^j deleting block j.
IntMatrix delete_block(const std::vector<std::size_t>& parts, std::size_t j);

/// Ranks of all sub-tuple cross effects sum to rank Φ(Z^{Σ parts}), and the
/// embedded summands together form a unimodular change of basis.
bool decomposition_check(const PolyFunctor& f, const std::vector<std::size_t>& parts);

/// ⋂_{j<n} Ker Φ(pr^j), computed directly and as Φ(A_1|...|A_{n−1}) ⊕ Φ(A_1|...|A_n)
/// embedded in Φ(A_1 ⊕ ... ⊕ A_n); throws InvariantViolation when the lattices differ.
struct KernelIntersection {
  CrossEffectSummand summand;          // built from the two cross effects
  IntMatrix kernel_basis;              // basis of ⋂ Ker Φ(pr^j)
  IntMatrix change_of_basis;           // kernel_basis = summand.embedding · change_of_basis
};
KernelIntersection kernel_intersection(const PolyFunctor& f, const std::vector<std::size_t>& parts);

/// π_target · Φ(m) · ρ_source, computed column-wise when both summands are label subsets.
IntMatrix restrict_map(const PolyFunctor& f, const CrossEffectSummand& target, const IntMatrix& m,
                       const CrossEffectSummand& source);

}  // namespace limrel
