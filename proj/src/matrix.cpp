#include "yperiod/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "yperiod/errors.hpp"

namespace yperiod {

SquareMatrix::SquareMatrix(std::size_t size) : size_(size), entries_(size * size) {}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : SquareMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != size_) throw std::invalid_argument("matrix rows must be square");
    std::size_t c = 0;
    for (const auto& v : row) (*this)(r, c++) = v;
    ++r;
  }
}

SquareMatrix SquareMatrix::identity(std::size_t size) {
  SquareMatrix m(size);
  for (std::size_t d = 0; d < size; ++d) m(d, d) = Rational(1);
  return m;
}

SquareMatrix SquareMatrix::longest_weyl(std::size_t size) {
  SquareMatrix m(size);
  for (std::size_t d = 0; d < size; ++d) m(d, size - 1 - d) = Rational(1);
  return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<Rational>& entries) {
  SquareMatrix m(entries.size());
  for (std::size_t d = 0; d < entries.size(); ++d) m(d, d) = entries[d];
  return m;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
  if (size_ != rhs.size_) throw std::invalid_argument("matrix size mismatch");
  SquareMatrix out(size_);
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t l = 0; l < size_; ++l) {
      const Rational& left = (*this)(r, l);
      if (left.is_zero()) continue;
      for (std::size_t c = 0; c < size_; ++c) {
        const Rational& right = rhs(l, c);
        if (!right.is_zero()) out(r, c) += left * right;
      }
    }
  }
  return out;
}

// With 0-based indices the anti-diagonal is r + c == size - 1.
bool SquareMatrix::is_anti_lower_triangular() const {
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; r + c + 1 < size_; ++c) {
      if (!(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool SquareMatrix::is_anti_upper_triangular() const {
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; c < size_; ++c) {
      if (r + c + 1 > size_ && !(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool SquareMatrix::is_anti_diagonal() const {
  return is_anti_lower_triangular() && is_anti_upper_triangular();
}

bool SquareMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; c < size_; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

int SquareMatrix::northwest_vanishing_bound() const {
  // smallest 1-based row + col carrying a nonzero entry
  int first = static_cast<int>(2 * size_ + 1);
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; c < size_; ++c) {
      if (!(*this)(r, c).is_zero()) first = std::min(first, static_cast<int>(r + c + 2));
    }
  }
  return first;
}

SquareMatrix SquareMatrix::diagonal_part() const {
  SquareMatrix out(size_);
  for (std::size_t d = 0; d < size_; ++d) out(d, d) = (*this)(d, d);
  return out;
}

SquareMatrix SquareMatrix::anti_diagonal_part() const {
  SquareMatrix out(size_);
  for (std::size_t d = 0; d < size_; ++d) out(d, size_ - 1 - d) = (*this)(d, size_ - 1 - d);
  return out;
}

SquareMatrix SquareMatrix::diagonal_inverse() const {
  if (!is_diagonal()) throw std::invalid_argument("diagonal_inverse of a non-diagonal matrix");
  SquareMatrix out(size_);
  for (std::size_t d = 0; d < size_; ++d) out(d, d) = (*this)(d, d).inverse();
  return out;
}

SquareMatrix SquareMatrix::direct_sum_identity(std::size_t d) const {
  SquareMatrix out = identity(size_ + d);
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; c < size_; ++c) out(r, c) = (*this)(r, c);
  }
  return out;
}

std::string SquareMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < size_; ++r) {
    s += r == 0 ? "[" : ",[";
    for (std::size_t c = 0; c < size_; ++c) {
      if (c != 0) s += ",";
      s += (*this)(r, c).to_string();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace yperiod
