#pragma once

#include "limrel/complexes.hpp"
#include "limrel/functor.hpp"

#include <string>
#include <vector>

namespace limrel {

/// Free cosimplicial module truncated at level `top()`: levels V^0..V^top,
/// cofaces d^i: V^n -> V^{n+1} (0 ≤ i ≤ n+1) for n < top and codegeneracies
/// s^i: V^n -> V^{n-1} (0 ≤ i ≤ n-1) for 1 ≤ n ≤ top.
struct CosimplicialModule {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<IntMatrix>> cofaces;          // cofaces[n][i] leaves level n
  std::vector<std::vector<IntMatrix>> codegeneracies;   // codegeneracies[n][i] leaves level n; [0] empty

  [[nodiscard]] std::size_t top() const { return ranks.size() - 1; }
  /// Human-readable description of every failing cosimplicial identity.
  [[nodiscard]] std::vector<std::string> identity_failures() const;
};

/// Free simplicial module truncated at level `top()`: faces d_i: V_n -> V_{n-1}
/// (0 ≤ i ≤ n) for 1 ≤ n ≤ top and degeneracies s_i: V_n -> V_{n+1} (0 ≤ i ≤ n) for n < top.
struct SimplicialModule {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<IntMatrix>> faces;         // faces[n][i] leaves level n; [0] empty
  std::vector<std::vector<IntMatrix>> degeneracies;  // degeneracies[n][i] leaves level n

  [[nodiscard]] std::size_t top() const { return ranks.size() - 1; }
  [[nodiscard]] std::vector<std::string> identity_failures() const;
};

/// Alternating sum of cofaces, levels 0..top.
CochainComplex nonnormalized_cochain(const CosimplicialModule& v);

/// ⋂ Ker(s^i) in each level with the restricted alternating coface sum.
struct NormalizedCochain {
  CochainComplex complex;
  std::vector<IntMatrix> inclusions;  // V^n x N^n, columns a basis of N^n
};
NormalizedCochain normalized_cochain_with_inclusions(const CosimplicialModule& v);
CochainComplex normalized_cochain(const CosimplicialModule& v);

/// Alternating sum of faces, levels 0..top.
ChainComplex nonnormalized_chain(const SimplicialModule& v);

/// V_n modulo the images of the degeneracies, realized on a split complement.
/// Homology at the top level is not meaningful: truncate at least one level past the last degree needed.
struct NormalizedChain {
  ChainComplex complex;
  std::vector<IntMatrix> quotients;  // N_n x V_n
  std::vector<IntMatrix> sections;   // V_n x N_n
};
NormalizedChain normalized_chain_with_maps(const SimplicialModule& v);
ChainComplex normalized_chain(const SimplicialModule& v);

/// DK^•(f) for f: U^0 -> U^1, levels (U^1)^n ⊕ U^0 for n ≤ top.
CosimplicialModule dk_of_map(const IntMatrix& f, std::size_t top);

/// DK_•(U) for a free chain complex, level n = ⊕_{σ: [n] ↠ [k]} U_k, n ≤ top.
SimplicialModule dk_chain(const ChainComplex& u, std::size_t top);

/// Surjections [n] ↠ [k] as their value sequences σ(0..n), in the order used by dk_chain.
std::vector<std::vector<int>> order_surjections(std::size_t n);

/// Φ applied to every level and structure map.
CosimplicialModule apply_levelwise(const PolyFunctor& f, const CosimplicialModule& v);
SimplicialModule apply_levelwise(const PolyFunctor& f, const SimplicialModule& v);

}  // namespace limrel
