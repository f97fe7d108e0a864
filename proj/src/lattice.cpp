#include "yperiod/lattice.hpp"

#include <sstream>

#include "yperiod/errors.hpp"

namespace yperiod {

void validate(SystemShape shape) {
  if (shape.r < 1 || shape.k < 1) {
    throw ShapeUnsupported("shape needs r >= 1 and k >= 1, got (" + shape.label() + ")");
  }
}

void require_gamma_shape(SystemShape shape) {
  validate(shape);
  if (shape.r < shape.k) {
    throw ShapeUnsupported("Gamma-system needs r >= k, got (" + shape.label() + ")");
  }
}

Site shift(Site s, Direction d) {
  switch (d) {
    case Direction::W:
      --s.n;
      break;
    case Direction::N:
      --s.i;
      break;
    case Direction::E:
      ++s.n;
      break;
    case Direction::S:
      ++s.i;
      break;
    case Direction::Plus:
      ++s.j;
      break;
    case Direction::Minus:
      --s.j;
      break;
  }
  return s;
}

bool in_truncated(SystemShape shape, Site s) {
  return 1 <= s.i && s.i <= shape.r && 1 <= s.j && s.j <= shape.k;
}

Parity parity(Site s) {
  // n + i + j may be negative; C++ % keeps the sign, so compare against 0.
  return (s.n + s.i + s.j) % 2 == 0 ? Parity::Even : Parity::Odd;
}

Site sigma(SystemShape shape, Site s) {
  return {s.n + shape.half_period(), shape.r + 1 - s.i, shape.k + 1 - s.j};
}

PlanePoint sigma_hat(SystemShape shape, PlanePoint p) {
  return {p.n + shape.half_period(), shape.half_period() - p.i};
}

Site sigma_hat(SystemShape shape, Site s) {
  return {s.n + shape.half_period(), shape.half_period() - s.i, shape.k + 1 - s.j};
}

GammaRanges::GammaRanges(SystemShape shape) : shape_(shape) { require_gamma_shape(shape); }

IntRange GammaRanges::x_rows(int j) const {
  if (j < 1 || j > shape_.k) return {};
  return {j, j + shape_.r};
}

IntRange GammaRanges::a_rows(int j) const {
  const int r = shape_.r;
  const int k = shape_.k;
  if (j == 1) return {1, r + 1};
  if (j >= 2 && j <= k) return {j, j + r - 1};
  if (j == k + 1) return {k, k + r};
  return {};
}

bool GammaRanges::x_valid(int j, int i) const { return x_rows(j).contains(i); }
bool GammaRanges::a_valid(int j, int i) const { return a_rows(j).contains(i); }

GammaRanges gamma_ranges(SystemShape shape) { return GammaRanges(shape); }

RegularRegion regular_region(SystemShape shape) {
  require_gamma_shape(shape);
  return {{shape.k, shape.r + 1}, {shape.k, shape.r + 2}};
}

std::ostream& operator<<(std::ostream& os, const Site& s) {
  return os << '(' << s.n << ',' << s.i << ',' << s.j << ')';
}

std::ostream& operator<<(std::ostream& os, const PlanePoint& p) {
  return os << '(' << p.n << ',' << p.i << ')';
}

std::ostream& operator<<(std::ostream& os, const SystemShape& s) {
  return os << '(' << s.r << ',' << s.k << ')';
}

std::string to_string(const Site& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::string to_string(const PlanePoint& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace yperiod
