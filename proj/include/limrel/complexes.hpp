#pragma once

#include "limrel/abelian_group.hpp"

#include <vector>

namespace limrel {

/// C^0 -> C^1 -> ... -> C^top of free modules; differential(n): C^n -> C^{n+1}.
class CochainComplex {
 public:
  CochainComplex() = default;
  /// Throws std::invalid_argument on shape mismatch, InvariantViolation if d∘d ≠ 0.
  CochainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials);

  [[nodiscard]] std::size_t length() const noexcept { return ranks_.size(); }
  [[nodiscard]] std::size_t rank(std::size_t n) const { return n < ranks_.size() ? ranks_[n] : 0; }
  [[nodiscard]] const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  /// C^n -> C^{n+1}; a zero matrix outside the stored range.
  [[nodiscard]] IntMatrix differential(std::size_t n) const;
  [[nodiscard]] FinAbGroup cohomology(std::size_t n) const;
  /// Cohomology in degrees 0..length()-1.
  [[nodiscard]] std::vector<FinAbGroup> cohomology() const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> differentials_;
};

/// C_0 <- C_1 <- ... <- C_top; differential(n): C_n -> C_{n-1} for n ≥ 1.
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials);

  [[nodiscard]] std::size_t length() const noexcept { return ranks_.size(); }
  [[nodiscard]] std::size_t rank(std::size_t n) const { return n < ranks_.size() ? ranks_[n] : 0; }
  [[nodiscard]] const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  /// C_n -> C_{n-1}; a zero matrix for n = 0 or beyond the stored range.
  [[nodiscard]] IntMatrix differential(std::size_t n) const;
  [[nodiscard]] FinAbGroup homology(std::size_t n) const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> differentials_;  // differentials_[n-1] = ∂_n
};

}  // namespace limrel
