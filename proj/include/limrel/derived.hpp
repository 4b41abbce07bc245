#pragma once

#include "limrel/abelian_group.hpp"
#include "limrel/functor.hpp"

#include <vector>

namespace limrel {

struct DerivedFunctorResult {
  std::string functor;
  FinAbGroup group;
  int q = 0;
  std::vector<FinAbGroup> values;  // values[i] = L_iΦ(A, q)
};

/// L_iΦ(A, q) for q ∈ {0, 1}, 0 ≤ i ≤ i_max: Φ applied levelwise to DK_• of the
/// free resolution R -> F of A placed in degrees q, q+1, then normalized homology.
/// Throws std::invalid_argument for other q.
DerivedFunctorResult derived(const PolyFunctor& f, const PresentedGroup& a, int q, std::size_t i_max);
DerivedFunctorResult derived(const PolyFunctor& f, const FinAbGroup& a, int q, std::size_t i_max);

/// (L_{i−1}Φ^#(A^∨,1))^⋄ ⊕ (L_iΦ^#(A^∨,1))^∨ for A = Z^rank, 0 ≤ i ≤ i_max.
std::vector<FinAbGroup> duality_predicted_limits(const PolyFunctor& f, std::size_t rank, std::size_t i_max);

/// (L_{i−1}Φ^#(A^⋄,0))^⋄ ⊕ (L_iΦ^#(A^⋄,0))^∨ for finite A (A^⋄ ≅ A abstractly).
std::vector<FinAbGroup> torsion_predicted_limits(const PolyFunctor& f, const FinAbGroup& a, std::size_t i_max);

struct K3Degree {
  std::size_t n = 0;
  FinAbGroup total;
  std::vector<std::pair<int, FinAbGroup>> contributions;  // (d, lim^{n-2d+1} S^d R_Z), nonzero only
};

/// H_n(K(Z,3); Z) = ⊕_{d≥2} lim^{n−2d+1} S^d R_Z for 4 ≤ n ≤ n_max.
std::vector<K3Degree> k3_homology(std::size_t n_max);

}  // namespace limrel
