#pragma once

// Dense exact square matrices of the small sizes used by the Gamma-system.
// Storage is row-major and 0-based; the shape predicates are phrased with
// 1-based (row, col) to match how the matrices are usually written.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "yperiod/rational.hpp"

namespace yperiod {

class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t size = 0);
  SquareMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static SquareMatrix identity(std::size_t size);
  // w: ones on the anti-diagonal.
  static SquareMatrix longest_weyl(std::size_t size);
  static SquareMatrix diagonal(const std::vector<Rational>& entries);

  std::size_t size() const { return size_; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * size_ + col];
  }
  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }

  SquareMatrix operator*(const SquareMatrix& rhs) const;
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  // Entries with row + col < size + 1 (1-based) vanish.
  bool is_anti_lower_triangular() const;
  // Entries with row + col > size + 1 (1-based) vanish.
  bool is_anti_upper_triangular() const;
  bool is_anti_diagonal() const;
  bool is_diagonal() const;

  // Largest b such that every entry with row + col < b (1-based) vanishes.
  int northwest_vanishing_bound() const;

  // Delta: keep the diagonal.
  SquareMatrix diagonal_part() const;
  // Delta-bar: keep the anti-diagonal.
  SquareMatrix anti_diagonal_part() const;

  // Inverse of a diagonal matrix. Throws DivisionByZero on a zero entry,
  // std::invalid_argument if the matrix is not diagonal.
  SquareMatrix diagonal_inverse() const;

  // M (+) I_d: M in the top-left corner, identity of size d below right.
  SquareMatrix direct_sum_identity(std::size_t d) const;

  std::string to_string() const;

 private:
  std::size_t size_;
  std::vector<Rational> entries_;
};

}  // namespace yperiod
