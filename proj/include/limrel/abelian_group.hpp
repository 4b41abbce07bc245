#pragma once

#include "limrel/integer_matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace limrel {

/// Malformed literal on the command line or in a test fixture.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Isomorphism type Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k of a finitely generated
/// abelian group, with t_1 | t_2 | ... | t_k and every t_i ≥ 2.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  static FinAbGroup free(std::size_t rank) { return FinAbGroup(rank, {}); }
  static FinAbGroup cyclic(const Integer& order);
  /// Z^free_rank ⊕ ⊕ Z/m_i for arbitrary moduli m_i (0 means Z, 1 is trivial).
  static FinAbGroup from_moduli(std::size_t free_rank, const std::vector<Integer>& moduli);
  /// Requires torsion to already be in divisibility-chain form.
  static FinAbGroup from_invariants(std::size_t free_rank, std::vector<Integer> torsion);
  /// Coker(m: Z^cols -> Z^rows).
  static FinAbGroup cokernel(const IntMatrix& m);

  [[nodiscard]] std::size_t free_rank() const noexcept { return free_rank_; }
  [[nodiscard]] const std::vector<Integer>& torsion() const noexcept { return torsion_; }

  [[nodiscard]] bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  [[nodiscard]] bool is_free() const noexcept { return torsion_.empty(); }
  [[nodiscard]] bool is_finite() const noexcept { return free_rank_ == 0; }
  /// Number of cyclic summands in the invariant-factor decomposition.
  [[nodiscard]] std::size_t generator_count() const noexcept { return free_rank_ + torsion_.size(); }
  [[nodiscard]] bool annihilated_by(const Integer& n) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  FinAbGroup(std::size_t rank, std::vector<Integer> torsion)
      : free_rank_(rank), torsion_(std::move(torsion)) {}

  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g);

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup direct_sum(const std::vector<FinAbGroup>& parts);

/// Ker(d_out) / Im(d_in) for a three-term stretch; throws InvariantViolation
/// when d_out · d_in ≠ 0.
FinAbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

/// Hom(A, Z): keeps the free part.
FinAbGroup dual_vee(const FinAbGroup& a);
/// On maps between free modules the dual is the transpose.
IntMatrix dual_vee(const IntMatrix& f);
/// Ext^1(A, Z): the torsion part, as an abstract isomorphism type.
FinAbGroup dual_diamond(const FinAbGroup& a);

/// Parses `Z^r`, `Z`, `Z/n` joined by `+` (whitespace ignored); `0` is the trivial group.
FinAbGroup parse_group(std::string_view text);

/// A finitely generated abelian group given as Z^generators / span(relation columns),
/// together with the surjection p: Z^generators -> A.
class PresentedGroup {
 public:
  PresentedGroup(std::size_t generators, IntMatrix relations);

  /// The presentation with one generator per invariant factor and diagonal relators.
  static PresentedGroup standard(const FinAbGroup& a);

  [[nodiscard]] std::size_t generators() const noexcept { return generators_; }
  [[nodiscard]] const IntMatrix& relations() const noexcept { return relations_; }

  [[nodiscard]] FinAbGroup normal_form() const;

  /// Basis of the relation module R = Ker(p) ⊆ Z^generators, as columns:
  /// the matrix of the embedding φ_p: R -> F.
  [[nodiscard]] IntMatrix kernel_embedding() const;

  /// Adds `extra` generators, each identified with an existing generator (or
  /// killed, when there are none), giving a different presentation of the same group.
  [[nodiscard]] PresentedGroup with_extra_generators(std::size_t extra) const;

  /// Appends the columns relations·combination (redundant relators).
  [[nodiscard]] PresentedGroup with_redundant_relators(const IntMatrix& combination) const;

 private:
  std::size_t generators_;
  IntMatrix relations_;
};

}  // namespace limrel
