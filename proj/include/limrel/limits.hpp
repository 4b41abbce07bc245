#pragma once

#include "limrel/complexes.hpp"
#include "limrel/cross_effects.hpp"
#include "limrel/relation.hpp"

#include <optional>
#include <vector>

namespace limrel {

/// Extra truncation levels requested through FUNCTOR_LIMITS_TRUNC_SLACK (default 0).
std::size_t truncation_slack();

/// Δ^{i,n}_φ: A^n ⊕ B -> A^{n+1} ⊕ B for φ: B -> A. For i < n the A-coordinate
/// with 0-based index i is repeated; for i = n the new coordinate φ(b) is
/// inserted before b.
IntMatrix delta(std::size_t i, std::size_t n, const IntMatrix& phi);

/// A^n ⊕ B -> A^n, dropping B.
IntMatrix drop_last(std::size_t n, std::size_t a_rank, std::size_t b_rank);
/// A^n -> A^n ⊕ B.
IntMatrix include_first(std::size_t n, std::size_t a_rank, std::size_t b_rank);

/// Φ_{[n|1]}(A, B) = Φ(A | ... | A | B) with n copies of A.
CrossEffectSummand mixed_cross_effect(const PolyFunctor& f, std::size_t n, std::size_t a_rank,
                                      std::size_t b_rank);

/// h^i_φ = π Φ(Δ^{i,n}_φ) ρ between Φ_{[n|1]} and Φ_{[n+1|1]}.
IntMatrix h_map(const PolyFunctor& f, std::size_t i, std::size_t n, const IntMatrix& phi);

/// C_Φ(φ): Φ(B) -> Φ(A|B) -> Φ(A|A|B) -> ..., degrees 0..top, differential Σ (−1)^i h^i.
/// Throws InvariantViolation if the differential does not square to zero.
CochainComplex c_phi(const PolyFunctor& f, const IntMatrix& phi, std::size_t top);

/// The chain map C_Φ(1_F, φ): C_Φ(φ) -> C_Φ(1_F) in degree n, for φ: R -> F.
IntMatrix comparison_map(const PolyFunctor& f, std::size_t n, const IntMatrix& phi);

enum class LimitRoute { Free, Cone };

struct LimitComplex {
  CochainComplex complex;  // cohomology in degree i is lim^i
  LimitRoute route = LimitRoute::Free;
  std::optional<Surjection> presentation;
};

/// Lim_{(id)} Φ R_A ≅ C_Φ(A)[−1] for A = Z^rank.
LimitComplex limit_complex_free(const PolyFunctor& f, std::size_t rank, std::size_t top);
/// Cone(C_Φ(1_F, φ_p): C_Φ(φ_p) -> C_Φ(F))[−1].
LimitComplex limit_complex_cone(const PolyFunctor& f, const Surjection& p, std::size_t top);

/// lim^i Φ R_A for 0 ≤ i ≤ i_max, A = Z^rank.
std::vector<FinAbGroup> limits_free(const PolyFunctor& f, std::size_t rank, std::size_t i_max);
/// lim^i Φ R_A for 0 ≤ i ≤ i_max via the cone over a presentation p.
std::vector<FinAbGroup> limits_via_cone(const PolyFunctor& f, const Surjection& p, std::size_t i_max);
/// Cohomotopy of Φ(R_A(p^•)) through its normalized cochain complex. Independent of
/// the cross-effect machinery but expensive: level n has rank Φ(Z^{(n+1)·rank F − rank A}).
std::vector<FinAbGroup> limits_via_relation_cosimplicial(const PolyFunctor& f, const Surjection& p,
                                                         std::size_t i_max);

}  // namespace limrel
