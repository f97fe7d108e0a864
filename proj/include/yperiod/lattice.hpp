#pragma once

// Index bookkeeping for the A_r x A_k lattices. All indices are 1-based in
// i and j, exactly as they appear in exported files; n is unrestricted.
//
// Directions: n grows to the East, i grows to the South, j is up/down.

#include <compare>
#include <ostream>
#include <string>

namespace yperiod {

struct Site {
  int n = 0;
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Site&, const Site&) = default;
};

struct PlanePoint {
  int n = 0;
  int i = 0;
  friend auto operator<=>(const PlanePoint&, const PlanePoint&) = default;
};

struct SystemShape {
  int r = 1;
  int k = 1;
  friend bool operator==(const SystemShape&, const SystemShape&) = default;
  friend auto operator<=>(const SystemShape&, const SystemShape&) = default;

  // r + k + 2: the shift in n of the twisted symmetry.
  int half_period() const { return r + k + 2; }
  SystemShape transposed() const { return {k, r}; }
  std::string label() const { return std::to_string(r) + "," + std::to_string(k); }
};

// Throws ShapeUnsupported unless r >= 1 and k >= 1.
void validate(SystemShape shape);
// Throws ShapeUnsupported unless additionally r >= k.
void require_gamma_shape(SystemShape shape);

// Inclusive integer interval; empty when lo > hi.
struct IntRange {
  int lo = 0;
  int hi = -1;
  bool contains(int v) const { return lo <= v && v <= hi; }
  bool empty() const { return lo > hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class Direction { W, N, E, S, Plus, Minus };
enum class Parity { Even, Odd };

Site shift(Site s, Direction d);
bool in_truncated(SystemShape shape, Site s);
Parity parity(Site s);
inline Parity parity(PlanePoint p) { return (p.n + p.i) % 2 == 0 ? Parity::Even : Parity::Odd; }

// (n, i, j) -> (n + r + k + 2, r + 1 - i, k + 1 - j)
Site sigma(SystemShape shape, Site s);
// (n, i) -> (n + r + k + 2, r + k + 2 - i)
PlanePoint sigma_hat(SystemShape shape, PlanePoint p);
// (n, i, j) -> (n + r + k + 2, r + k + 2 - i, k + 1 - j)
Site sigma_hat(SystemShape shape, Site s);

// Validity of the Gamma edge variables x_j(n, i) and a_j(n, i); n is free.
class GammaRanges {
 public:
  explicit GammaRanges(SystemShape shape);

  SystemShape shape() const { return shape_; }
  // 1 <= j <= k and j <= i <= j + r.
  bool x_valid(int j, int i) const;
  // j = 1: 1 <= i <= r + 1; 2 <= j <= k: j <= i <= j + r - 1; j = k + 1: k <= i <= k + r.
  bool a_valid(int j, int i) const;
  IntRange x_rows(int j) const;
  IntRange a_rows(int j) const;

 private:
  SystemShape shape_;
};

// Throws ShapeUnsupported if r < k.
GammaRanges gamma_ranges(SystemShape shape);

struct RegularRegion {
  IntRange edge_rows;    // k .. r + 1: full (k+1)x(k+1) edge matrices exist
  IntRange vertex_rows;  // k .. r + 2: endpoints of regular edges
};

// Throws ShapeUnsupported if r < k.
RegularRegion regular_region(SystemShape shape);

std::ostream& operator<<(std::ostream& os, const Site& s);
std::ostream& operator<<(std::ostream& os, const PlanePoint& p);
std::ostream& operator<<(std::ostream& os, const SystemShape& s);
std::string to_string(const Site& s);
std::string to_string(const PlanePoint& p);

}  // namespace yperiod
