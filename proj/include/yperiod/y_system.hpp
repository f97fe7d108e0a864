#pragma once

// The Y-system on the even sublattice: seeding, forward extension, relation
// and periodicity checks. Relations live on odd sites m and read
//
//   Y^W Y^E = (1 + Y^N)(1 + Y^S) / ((1 + 1/Y_+)(1 + 1/Y_-))
//
// In truncated mode a factor whose site leaves [1,r] x [1,k] is omitted.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "yperiod/lattice.hpp"
#include "yperiod/rational.hpp"
#include "yperiod/report.hpp"

namespace yperiod {

inline constexpr int kMaxRetries = 32;

enum class YMode { Truncated, InfiniteWindow };

class YState {
 public:
  explicit YState(SystemShape shape, YMode mode = YMode::Truncated);

  SystemShape shape() const { return shape_; }
  YMode mode() const { return mode_; }
  const std::map<Site, Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  const Rational* find(const Site& s) const;
  bool contains(const Site& s) const { return find(s) != nullptr; }
  // Throws MissingNeighbor when absent.
  const Rational& at(const Site& s) const;

  // Rejects odd sites and (truncated mode) sites outside the box with
  // std::invalid_argument, zero values with DegenerateValue.
  void set(const Site& s, Rational value);
  // Same as set but skips validation; used by fault-injection tests only.
  void overwrite_unchecked(const Site& s, Rational value) { values_[s] = std::move(value); }

  // Smallest interval containing every stored n; empty for an empty state.
  IntRange n_range() const;

  friend bool operator==(const YState&, const YState&) = default;

 private:
  SystemShape shape_;
  YMode mode_;
  std::map<Site, Rational> values_;
};

// Sites (0,i,j) with i + j even and (1,i,j) with i + j odd: one per column.
std::vector<Site> seed_sites(SystemShape shape);

YState seed_with(SystemShape shape, const std::function<Rational(const Site&)>& value);
YState seed_random(SystemShape shape, Rng& rng, std::uint32_t bound);
// Nonzero seeds of either sign (expert mode). Singularities become possible.
YState seed_random_nonzero(SystemShape shape, Rng& rng, std::uint32_t bound);

// The six lattice neighbours that enter the relation at an odd site, in the
// order W, E, N, S, plus, minus.
std::vector<Site> relation_neighbors(const Site& m);

// Right-hand side of the relation at an odd site. Throws
// std::invalid_argument for even sites, MissingNeighbor if a value that the
// relation needs is not stored.
Rational relation_rhs(const YState& state, const Site& m);

// Fills every even site with 0 <= n <= n_max by Y^E = rhs / Y^W.
// Throws DegenerateValue if a produced value vanishes.
YState extend(YState state, int n_max);

// 2(r+k+2)+2: enough to see sigma and sigma^2.
int default_y_window(SystemShape shape);

struct SimulatedY {
  YState state;
  int retries = 0;
};

// Seeds and extends with up to kMaxRetries reseeds on DegenerateValue.
// Throws SeedExhausted when the budget is spent.
SimulatedY simulate_y(SystemShape shape, Rng& rng, std::uint32_t bound, int n_max,
                      bool allow_negative = false);

// "relations": Y^W Y^E == rhs at every odd site whose data is stored.
Report check_relations(const YState& state);
// "periodicity": Y(sigma(s)) == Y(s) whenever both are stored.
// Infinite-window states have no sigma and produce no checks.
Report check_periodicity(const YState& state);
// "sigma-squared": Y(n + 2(r+k+2), i, j) == Y(n, i, j).
Report check_translation(const YState& state);

// W(n, j, i) = 1 / Y(n, i, j) as a state of the transposed (k, r) system.
YState dual(const YState& state);

// Window of the un-truncated even lattice: layer n keeps the sites with
// |i - i_center| + |j - j_center| <= radius + max(n_max - n, 0).
struct Diamond {
  int n_max = 0;
  int i_center = 0;
  int j_center = 0;
  int radius = 0;
  bool contains(const Site& s) const;
};

// Seeds layers n = 0, 1 from `seed` and extends to the window with no
// omitted factors. The result has mode InfiniteWindow.
YState extend_infinite_window(const std::function<Rational(const Site&)>& seed,
                              const Diamond& window);

}  // namespace yperiod
