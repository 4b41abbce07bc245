#include "limrel/smith.hpp"

#include <algorithm>
#include <utility>

namespace limrel {
namespace {

// Elimination state. Row operations act on `a`, U (rows) and U^{-1} (columns);
// column operations act on `a`, V (columns) and V^{-1} (rows).
class SmithReducer {
 public:
  SmithReducer(const IntMatrix& m, SnfTransforms t) : a_(m), t_(t) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (t_.left) u_ = IntMatrix::identity(rows);
    if (t_.left_inverse) u_inv_ = IntMatrix::identity(rows);
    if (t_.right) v_ = IntMatrix::identity(cols);
    if (t_.right_inverse) v_inv_ = IntMatrix::identity(cols);
  }

  SnfResult run() {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    const std::size_t limit = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!bring_pivot(t)) break;
      clear_cross(t);
      if (sgn(a_(t, t)) < 0) negate_row(t);
    }
    const std::size_t r = t;
    fix_divisibility(r);

    SnfResult out;
    out.source_dim = cols;
    out.target_dim = rows;
    out.diagonal.reserve(r);
    for (std::size_t i = 0; i < r; ++i) out.diagonal.push_back(a_(i, i));
    out.D = std::move(a_);
    out.U = std::move(u_);
    out.U_inv = std::move(u_inv_);
    out.V = std::move(v_);
    out.V_inv = std::move(v_inv_);
    return out;
  }

 private:
  // Finds a nonzero entry of smallest absolute value in the trailing block and
  // moves it to (t, t). Stops early at a unit.
  bool bring_pivot(std::size_t t) {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    std::size_t best_r = rows, best_c = cols;
    for (std::size_t r = t; r < rows; ++r) {
      auto row = a_.row(r);
      for (std::size_t c = t; c < cols; ++c) {
        if (sgn(row[c]) == 0) continue;
        if (best_r == rows || mpz_cmpabs(row[c].get_mpz_t(), a_(best_r, best_c).get_mpz_t()) < 0) {
          best_r = r;
          best_c = c;
          if (mpz_cmpabs_ui(row[c].get_mpz_t(), 1) == 0) goto found;
        }
      }
    }
    if (best_r == rows) return false;
  found:
    if (best_r != t) swap_rows(t, best_r);
    if (best_c != t) swap_cols(t, best_c);
    return true;
  }

  void clear_cross(std::size_t t) {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    Integer q;
    std::vector<std::size_t> support;
    for (;;) {
      // Column t below the pivot.
      support.clear();
      for (std::size_t c = t; c < cols; ++c)
        if (sgn(a_(t, c)) != 0) support.push_back(c);
      std::size_t smallest = rows;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (sgn(a_(r, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_row_multiple(r, t, -q, support);
        if (sgn(a_(r, t)) != 0 &&
            (smallest == rows ||
             mpz_cmpabs(a_(r, t).get_mpz_t(), a_(smallest, t).get_mpz_t()) < 0))
          smallest = r;
      }
      if (smallest != rows) {
        swap_rows(t, smallest);
        continue;
      }
      // Row t right of the pivot; column t is now zero below the pivot, and all
      // rows above t vanish from column t on, so only entry (t, j) changes.
      std::size_t smallest_c = cols;
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (sgn(a_(t, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_col_multiple_pivot_only(c, t, -q);
        if (sgn(a_(t, c)) != 0 &&
            (smallest_c == cols ||
             mpz_cmpabs(a_(t, c).get_mpz_t(), a_(t, smallest_c).get_mpz_t()) < 0))
          smallest_c = c;
      }
      if (smallest_c == cols) return;
      swap_cols(t, smallest_c);
    }
  }

  // Enforces d_i | d_j for i < j with 2x2 gcd/lcm moves on the diagonal.
  void fix_divisibility(std::size_t r) {
    Integer g, s, tt, ag, bg;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        const Integer a = a_(i, i), b = a_(j, j);
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) continue;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        ag = a / g;
        bg = b / g;
        // L = [[s, t], [-b/g, a/g]], R = [[1, -t b/g], [1, s a/g]]
        combine_rows(i, j, s, tt, -bg, ag);
        combine_cols(i, j, Integer(1), Integer(-tt * bg), Integer(1), Integer(s * ag));
        a_(i, i) = g;
        a_(j, j) = a * bg;
        a_(i, j) = 0;
        a_(j, i) = 0;
      }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    if (t_.left)
      for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
    if (t_.left_inverse)
      for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, i), u_inv_(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    if (t_.right)
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
    if (t_.right_inverse)
      for (std::size_t c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(i, c), v_inv_(j, c));
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    if (t_.left)
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
    if (t_.left_inverse)
      for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
  }

  // row_dst += q * row_src, touching only the listed columns of `a_`.
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q,
                        const std::vector<std::size_t>& support) {
    for (std::size_t c : support) addmul(a_(dst, c), q, a_(src, c));
    if (t_.left)
      for (std::size_t c = 0; c < u_.cols(); ++c)
        if (sgn(u_(src, c)) != 0) addmul(u_(dst, c), q, u_(src, c));
    // U^{-1} <- U^{-1} (I - q e_dst e_src^T): col_src -= q col_dst
    if (t_.left_inverse)
      for (std::size_t r = 0; r < u_inv_.rows(); ++r)
        if (sgn(u_inv_(r, dst)) != 0) submul(u_inv_(r, src), q, u_inv_(r, dst));
  }

  // col_dst += q * col_src where col_src of `a_` is zero outside the pivot row src.
  void add_col_multiple_pivot_only(std::size_t dst, std::size_t src, const Integer& q) {
    addmul(a_(src, dst), q, a_(src, src));
    if (t_.right)
      for (std::size_t r = 0; r < v_.rows(); ++r)
        if (sgn(v_(r, src)) != 0) addmul(v_(r, dst), q, v_(r, src));
    // V^{-1} <- (I - q e_src e_dst^T) V^{-1}: row_src -= q row_dst
    if (t_.right_inverse)
      for (std::size_t c = 0; c < v_inv_.cols(); ++c)
        if (sgn(v_inv_(dst, c)) != 0) submul(v_inv_(src, c), q, v_inv_(dst, c));
  }

  // Rows (i, j) <- L (rows i, j) with L = [[l00, l01], [l10, l11]], det L = 1.
  void combine_rows(std::size_t i, std::size_t j, const Integer& l00, const Integer& l01,
                    const Integer& l10, const Integer& l11) {
    auto apply = [&](IntMatrix& m) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        Integer x = m(i, c), y = m(j, c);
        m(i, c) = l00 * x + l01 * y;
        m(j, c) = l10 * x + l11 * y;
      }
    };
    if (t_.left) apply(u_);
    if (t_.left_inverse) {
      // U^{-1} <- U^{-1} L^{-1}, L^{-1} = [[l11, -l01], [-l10, l00]]
      for (std::size_t r = 0; r < u_inv_.rows(); ++r) {
        Integer x = u_inv_(r, i), y = u_inv_(r, j);
        u_inv_(r, i) = x * l11 - y * l10;
        u_inv_(r, j) = -x * l01 + y * l00;
      }
    }
  }

  // Columns (i, j) <- (cols i, j) R with R = [[r00, r01], [r10, r11]], det R = 1.
  void combine_cols(std::size_t i, std::size_t j, const Integer& r00, const Integer& r01,
                    const Integer& r10, const Integer& r11) {
    if (t_.right)
      for (std::size_t r = 0; r < v_.rows(); ++r) {
        Integer x = v_(r, i), y = v_(r, j);
        v_(r, i) = x * r00 + y * r10;
        v_(r, j) = x * r01 + y * r11;
      }
    if (t_.right_inverse) {
      // V^{-1} <- R^{-1} V^{-1}, R^{-1} = [[r11, -r01], [-r10, r00]]
      for (std::size_t c = 0; c < v_inv_.cols(); ++c) {
        Integer x = v_inv_(i, c), y = v_inv_(j, c);
        v_inv_(i, c) = r11 * x - r01 * y;
        v_inv_(j, c) = -r10 * x + r00 * y;
      }
    }
  }

  static void addmul(Integer& dst, const Integer& q, const Integer& x) {
    mpz_addmul(dst.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t());
  }
  static void submul(Integer& dst, const Integer& q, const Integer& x) {
    mpz_submul(dst.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t());
  }

  IntMatrix a_;
  SnfTransforms t_;
  IntMatrix u_, u_inv_, v_, v_inv_;
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, SnfTransforms transforms) {
  return SmithReducer(m, transforms).run();
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  return smith_normal_form(m, SnfTransforms::none()).diagonal;
}

std::size_t matrix_rank(const IntMatrix& m) { return invariant_factors(m).size(); }

IntMatrix kernel_basis(const IntMatrix& m) {
  auto snf = smith_normal_form(m, {false, false, true, false});
  const std::size_t n = m.cols(), r = snf.rank();
  IntMatrix k(n, n - r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) k(i, j - r) = snf.V(i, j);
  return k;
}

IntMatrix image_basis(const IntMatrix& m) {
  auto snf = smith_normal_form(m, {false, true, false, false});
  const std::size_t rows = m.rows(), r = snf.rank();
  IntMatrix b(rows, r);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < r; ++j) b(i, j) = snf.U_inv(i, j) * snf.diagonal[j];
  return b;
}

std::optional<IntMatrix> solve_in_lattice(const IntMatrix& b, const IntMatrix& y) {
  if (b.rows() != y.rows()) throw std::invalid_argument("solve_in_lattice: row mismatch");
  auto snf = smith_normal_form(b, {true, false, true, false});
  const IntMatrix z = snf.U * y;
  const std::size_t r = snf.rank();
  IntMatrix w(b.cols(), y.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t c = 0; c < z.cols(); ++c) {
      if (i >= r) {
        if (sgn(z(i, c)) != 0) return std::nullopt;
        continue;
      }
      if (!mpz_divisible_p(z(i, c).get_mpz_t(), snf.diagonal[i].get_mpz_t())) return std::nullopt;
      mpz_divexact(w(i, c).get_mpz_t(), z(i, c).get_mpz_t(), snf.diagonal[i].get_mpz_t());
    }
  return snf.V * w;
}

IntMatrix solve_in_lattice_or_throw(const IntMatrix& b, const IntMatrix& y, const char* what) {
  auto x = solve_in_lattice(b, y);
  if (!x) throw InvariantViolation(std::string(what) + ": vector outside the expected lattice");
  return std::move(*x);
}

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return solve_in_lattice(a, b).has_value() && solve_in_lattice(b, a).has_value();
}

SplitCokernel split_cokernel(const IntMatrix& m) {
  auto snf = smith_normal_form(m, {true, true, false, false});
  for (const auto& d : snf.diagonal)
    if (d != 1) throw InvariantViolation("split_cokernel: cokernel has torsion");
  const std::size_t rows = m.rows(), r = snf.rank();
  SplitCokernel out{IntMatrix(rows - r, rows), IntMatrix(rows, rows - r)};
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t c = 0; c < rows; ++c) {
      out.quotient(i - r, c) = snf.U(i, c);
      out.section(c, i - r) = snf.U_inv(c, i);
    }
  return out;
}

}  // namespace limrel
