#include "yperiod/y_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "yperiod/errors.hpp"

namespace yperiod {

YState::YState(SystemShape shape, YMode mode) : shape_(shape), mode_(mode) {
  if (mode_ == YMode::Truncated) validate(shape_);
}

const Rational* YState::find(const Site& s) const {
  const auto it = values_.find(s);
  return it == values_.end() ? nullptr : &it->second;
}

const Rational& YState::at(const Site& s) const {
  const Rational* v = find(s);
  if (v == nullptr) throw MissingNeighbor("no Y value at " + to_string(s));
  return *v;
}

void YState::set(const Site& s, Rational value) {
  if (parity(s) != Parity::Even) {
    throw std::invalid_argument("Y values live on even sites, got " + to_string(s));
  }
  if (mode_ == YMode::Truncated && !in_truncated(shape_, s)) {
    throw std::invalid_argument("site " + to_string(s) + " outside the truncated lattice");
  }
  if (value.is_zero()) {
    throw DegenerateValue("zero Y value at " + to_string(s));
  }
  values_[s] = std::move(value);
}

IntRange YState::n_range() const {
  if (values_.empty()) return {};
  // map order is lexicographic in (n, i, j)
  return {values_.begin()->first.n, values_.rbegin()->first.n};
}

std::vector<Site> seed_sites(SystemShape shape) {
  validate(shape);
  std::vector<Site> sites;
  for (int i = 1; i <= shape.r; ++i) {
    for (int j = 1; j <= shape.k; ++j) {
      sites.push_back({(i + j) % 2 == 0 ? 0 : 1, i, j});
    }
  }
  std::sort(sites.begin(), sites.end());
  return sites;
}

YState seed_with(SystemShape shape, const std::function<Rational(const Site&)>& value) {
  YState state(shape);
  for (const Site& s : seed_sites(shape)) state.set(s, value(s));
  return state;
}

YState seed_random(SystemShape shape, Rng& rng, std::uint32_t bound) {
  return seed_with(shape, [&](const Site&) { return sample_positive(rng, bound); });
}

YState seed_random_nonzero(SystemShape shape, Rng& rng, std::uint32_t bound) {
  return seed_with(shape, [&](const Site&) {
    Rational v = sample_positive(rng, bound);
    return std::bernoulli_distribution(0.5)(rng) ? -v : v;
  });
}

std::vector<Site> relation_neighbors(const Site& m) {
  return {shift(m, Direction::W), shift(m, Direction::E),    shift(m, Direction::N),
          shift(m, Direction::S), shift(m, Direction::Plus), shift(m, Direction::Minus)};
}

namespace {

// Value of a neighbour slot, or nullptr if the slot is omitted (truncation).
const Rational* slot_value(const YState& state, const Site& s) {
  if (state.mode() == YMode::Truncated && !in_truncated(state.shape(), s)) return nullptr;
  return &state.at(s);
}

}  // namespace

Rational relation_rhs(const YState& state, const Site& m) {
  if (parity(m) != Parity::Odd) {
    throw std::invalid_argument("relations live on odd sites, got " + to_string(m));
  }
  Rational rhs(1);
  for (Direction d : {Direction::N, Direction::S}) {
    if (const Rational* y = slot_value(state, shift(m, d))) rhs *= Rational(1) + *y;
  }
  for (Direction d : {Direction::Plus, Direction::Minus}) {
    // 1 / (1 + 1/y) = y / (1 + y)
    if (const Rational* y = slot_value(state, shift(m, d))) rhs *= *y / (Rational(1) + *y);
  }
  return rhs;
}

YState extend(YState state, int n_max) {
  if (state.mode() != YMode::Truncated) {
    throw std::invalid_argument("extend works on truncated states");
  }
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const SystemShape shape = state.shape();
  for (const Site& s : seed_sites(shape)) {
    if (!state.contains(s)) throw MissingNeighbor("missing seed at " + to_string(s));
  }
  for (int n = 1; n < n_max; ++n) {
    for (int i = 1; i <= shape.r; ++i) {
      for (int j = 1; j <= shape.k; ++j) {
        const Site m{n, i, j};
        if (parity(m) != Parity::Odd) continue;
        const Site east = shift(m, Direction::E);
        if (state.contains(east)) continue;
        const Rational& west = state.at(shift(m, Direction::W));
        Rational value = relation_rhs(state, m) / west;
        state.set(east, std::move(value));
      }
    }
  }
  return state;
}

int default_y_window(SystemShape shape) { return 2 * shape.half_period() + 2; }

SimulatedY simulate_y(SystemShape shape, Rng& rng, std::uint32_t bound, int n_max,
                      bool allow_negative) {
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    YState seeds = allow_negative ? seed_random_nonzero(shape, rng, bound)
                                  : seed_random(shape, rng, bound);
    try {
      return {extend(std::move(seeds), n_max), attempt};
    } catch (const DegenerateValue&) {
    } catch (const DivisionByZero&) {
    }
  }
  throw SeedExhausted("no generic Y seed after " + std::to_string(kMaxRetries) + " retries");
}

Report check_relations(const YState& state) {
  Report report;
  const SystemShape shape = state.shape();
  for (const auto& [west, y_west] : state.values()) {
    const Site m = shift(west, Direction::E);
    const Site east = shift(m, Direction::E);
    const Rational* y_east = state.find(east);
    if (y_east == nullptr) continue;
    Rational rhs;
    const Rational lhs = y_west * *y_east;
    try {
      rhs = relation_rhs(state, m);
    } catch (const MissingNeighbor&) {
      continue;  // not checkable inside this window
    } catch (const DivisionByZero&) {
      // some neighbour is -1: the right side is undefined, so the relation fails
      report.record("relations", shape, false, to_string(m), "undefined", lhs.to_string());
      continue;
    }
    report.record("relations", shape, lhs == rhs, to_string(m), rhs.to_string(), lhs.to_string());
  }
  return report;
}

Report check_periodicity(const YState& state) {
  Report report;
  if (state.mode() != YMode::Truncated) return report;
  const SystemShape shape = state.shape();
  for (const auto& [s, y] : state.values()) {
    const Site image = sigma(shape, s);
    const Rational* y_image = state.find(image);
    if (y_image == nullptr) continue;
    report.record("periodicity", shape, *y_image == y, to_string(s) + "->" + to_string(image),
                  y.to_string(), y_image->to_string());
  }
  return report;
}

Report check_translation(const YState& state) {
  Report report;
  if (state.mode() != YMode::Truncated) return report;
  const SystemShape shape = state.shape();
  const int period = 2 * shape.half_period();
  for (const auto& [s, y] : state.values()) {
    const Site image{s.n + period, s.i, s.j};
    const Rational* y_image = state.find(image);
    if (y_image == nullptr) continue;
    report.record("sigma-squared", shape, *y_image == y, to_string(s) + "->" + to_string(image),
                  y.to_string(), y_image->to_string());
  }
  return report;
}

YState dual(const YState& state) {
  YState out(state.shape().transposed(), state.mode());
  for (const auto& [s, y] : state.values()) {
    out.set({s.n, s.j, s.i}, y.inverse());
  }
  return out;
}

bool Diamond::contains(const Site& s) const {
  if (s.n < 0 || s.n > std::max(n_max, 1)) return false;
  if (parity(s) != Parity::Even) return false;
  const int dist = std::abs(s.i - i_center) + std::abs(s.j - j_center);
  return dist <= radius + std::max(n_max - s.n, 0);
}

YState extend_infinite_window(const std::function<Rational(const Site&)>& seed,
                              const Diamond& window) {
  if (window.radius < 0) throw std::invalid_argument("diamond radius must be >= 0");
  YState state(SystemShape{1, 1}, YMode::InfiniteWindow);
  const int top = std::max(window.n_max, 1);
  auto for_layer = [&](int n, auto&& fn) {
    const int reach = window.radius + std::max(window.n_max - n, 0);
    for (int i = window.i_center - reach; i <= window.i_center + reach; ++i) {
      const int rest = reach - std::abs(i - window.i_center);
      for (int j = window.j_center - rest; j <= window.j_center + rest; ++j) {
        const Site s{n, i, j};
        if (parity(s) == Parity::Even) fn(s);
      }
    }
  };
  for (int n : {0, 1}) {
    for_layer(n, [&](const Site& s) { state.set(s, seed(s)); });
  }
  for (int n = 2; n <= top; ++n) {
    for_layer(n, [&](const Site& s) {
      const Site m = shift(s, Direction::W);
      Rational value = relation_rhs(state, m) / state.at(shift(m, Direction::W));
      state.set(s, std::move(value));
    });
  }
  return state;
}

}  // namespace yperiod
