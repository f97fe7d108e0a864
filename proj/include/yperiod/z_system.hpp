#pragma once

// The shifted z-system. A ZState stores z_j(n, i) under Site{n, i, j} where i
// is already the shifted row index, so membership in the truncated lattice is
// n + i even, 1 <= j <= k, j + 1 <= i <= j + r. The relation at an odd site is
//
//   z^W z^E = (1 - z^N_-) / (1 - 1/z^N) * (1 - z^S_+) / (1 - 1/z^S)
//
// with every factor whose variable leaves the truncated lattice omitted.

#include <map>
#include <string>

#include "yperiod/lattice.hpp"
#include "yperiod/rational.hpp"
#include "yperiod/report.hpp"
#include "yperiod/y_system.hpp"

namespace yperiod {

enum class ZProvenance { FromY, FromGamma };

bool in_z_lattice(SystemShape shape, const Site& s);

class ZState {
 public:
  ZState(SystemShape shape, ZProvenance provenance);

  SystemShape shape() const { return shape_; }
  ZProvenance provenance() const { return provenance_; }
  const std::map<Site, Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  const Rational* find(const Site& s) const;
  // Rejects sites off the even truncated z-lattice (std::invalid_argument)
  // and zero values (DegenerateValue).
  void set(const Site& s, Rational value);
  void overwrite_unchecked(const Site& s, Rational value) { values_[s] = std::move(value); }

  friend bool operator==(const ZState&, const ZState&) = default;

 private:
  SystemShape shape_;
  ZProvenance provenance_;
  std::map<Site, Rational> values_;
};

// z_j(n, i + j) = -1 / Y(n, i, j).
ZState y_to_z(const YState& state);
// Inverse relabelling: Y(n, i, j) = -1 / z_j(n, i + j).
YState z_to_y(const ZState& state);

// Which of the four factors survive at an odd site.
struct ZSlots {
  bool north_minus = true;  // (1 - z^N_-)
  bool north = true;        // 1 / (1 - 1/z^N)
  bool south_plus = true;   // (1 - z^S_+)
  bool south = true;        // 1 / (1 - 1/z^S)
  friend bool operator==(const ZSlots&, const ZSlots&) = default;
};

ZSlots z_relation_slots(SystemShape shape, const Site& m);

// Boundary classes an odd site belongs to: "interior", "j=1", "j=k", "i=j+1",
// "i=j+r" and the corners "j=1,i=j+1", "j=1,i=j+r", "j=k,i=j+1", "j=k,i=j+r".
std::vector<std::string> z_site_classes(SystemShape shape, const Site& m);

// Product of the surviving factors. Throws DegenerateFactor if a kept
// 1/(1 - 1/z) factor has z == 1, MissingNeighbor if a kept value is absent.
Rational z_relation_rhs(const ZState& state, const Site& m);

// "z-relations" plus one "z-class:<class>" counter per boundary class.
Report z_relation_check(const ZState& state);
// "z-sigma": z(sigma_hat(s)) == z(s) whenever both are stored.
Report z_sigma_hat_check(const ZState& state);

}  // namespace yperiod
