#pragma once

#include "limrel/integer_matrix.hpp"

#include <optional>
#include <vector>

namespace limrel {

/// Which unimodular transforms smith_normal_form should accumulate.
/// Skipping them keeps large homology computations cheap.
struct SnfTransforms {
  bool left = true;          // U
  bool left_inverse = true;  // U^{-1}
  bool right = true;         // V
  bool right_inverse = true; // V^{-1}

  static SnfTransforms none() { return {false, false, false, false}; }
};

/// U·M·V = D with U, V unimodular and D diagonal; the nonzero diagonal
/// entries are positive and form a divisibility chain d_1 | d_2 | ...
/// Transforms not requested are left empty.
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::vector<Integer> diagonal;  // the nonzero d_k, in order
  std::size_t source_dim = 0;     // columns of M
  std::size_t target_dim = 0;     // rows of M

  [[nodiscard]] std::size_t rank() const noexcept { return diagonal.size(); }
};

SnfResult smith_normal_form(const IntMatrix& m, SnfTransforms transforms = {});

/// Nonzero invariant factors of m (no transforms are accumulated).
std::vector<Integer> invariant_factors(const IntMatrix& m);

std::size_t matrix_rank(const IntMatrix& m);

/// Columns form a basis of Ker(m); the kernel is a saturated sublattice.
IntMatrix kernel_basis(const IntMatrix& m);

/// Columns form a basis of the lattice spanned by the columns of m.
IntMatrix image_basis(const IntMatrix& m);

/// X with b·X = y, or nullopt if some column of y is outside the column lattice of b.
/// When b has dependent columns the solution is one particular choice.
std::optional<IntMatrix> solve_in_lattice(const IntMatrix& b, const IntMatrix& y);

/// Like solve_in_lattice, but a missing solution is an InvariantViolation.
IntMatrix solve_in_lattice_or_throw(const IntMatrix& b, const IntMatrix& y, const char* what);

/// True iff the columns of a and b span the same sublattice of Z^rows.
bool same_column_lattice(const IntMatrix& a, const IntMatrix& b);

/// For m whose column lattice is a direct summand of Z^rows: a quotient map
/// onto Z^rows / im(m) and a section of it, chosen from the Smith transforms.
/// Throws InvariantViolation if the cokernel has torsion.
struct SplitCokernel {
  IntMatrix quotient;  // (rows - r) x rows
  IntMatrix section;   // rows x (rows - r); quotient * section = id
};
SplitCokernel split_cokernel(const IntMatrix& m);

}  // namespace limrel
