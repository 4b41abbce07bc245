#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace limrel {

using Integer = mpz_class;

/// Raised when an internal algebraic identity fails at runtime
/// (d∘d ≠ 0, a summand that does not split, a lattice that does not match).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense matrix over the integers. A matrix with `rows` rows and `cols`
/// columns represents a homomorphism Z^cols -> Z^rows acting on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);
  static IntMatrix column(std::span<const Integer> entries);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;

  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] IntMatrix select_rows(std::span<const std::size_t> rows) const;
  [[nodiscard]] IntMatrix select_cols(std::span<const std::size_t> cols) const;
  [[nodiscard]] IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& m);

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& s);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator-(IntMatrix a) { return a *= Integer(-1); }
  friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// [a | b], requires equal row counts.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// [a ; b], requires equal column counts.
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

}  // namespace limrel
