#include "yperiod/z_system.hpp"

#include <stdexcept>

#include "yperiod/errors.hpp"

namespace yperiod {

bool in_z_lattice(SystemShape shape, const Site& s) {
  return 1 <= s.j && s.j <= shape.k && s.j + 1 <= s.i && s.i <= s.j + shape.r;
}

ZState::ZState(SystemShape shape, ZProvenance provenance)
    : shape_(shape), provenance_(provenance) {
  validate(shape_);
}

const Rational* ZState::find(const Site& s) const {
  const auto it = values_.find(s);
  return it == values_.end() ? nullptr : &it->second;
}

void ZState::set(const Site& s, Rational value) {
  if ((s.n + s.i) % 2 != 0 || !in_z_lattice(shape_, s)) {
    throw std::invalid_argument("site " + to_string(s) + " is off the even z-lattice");
  }
  if (value.is_zero()) throw DegenerateValue("zero z value at " + to_string(s));
  values_[s] = std::move(value);
}

ZState y_to_z(const YState& state) {
  if (state.mode() != YMode::Truncated) {
    throw std::invalid_argument("y_to_z needs a truncated state");
  }
  ZState z(state.shape(), ZProvenance::FromY);
  for (const auto& [s, y] : state.values()) {
    z.set({s.n, s.i + s.j, s.j}, -y.inverse());
  }
  return z;
}

YState z_to_y(const ZState& state) {
  YState y(state.shape());
  for (const auto& [s, z] : state.values()) {
    y.set({s.n, s.i - s.j, s.j}, -z.inverse());
  }
  return y;
}

ZSlots z_relation_slots(SystemShape shape, const Site& m) {
  ZSlots slots;
  slots.north_minus = in_z_lattice(shape, {m.n, m.i - 1, m.j - 1});
  slots.north = in_z_lattice(shape, {m.n, m.i - 1, m.j});
  slots.south_plus = in_z_lattice(shape, {m.n, m.i + 1, m.j + 1});
  slots.south = in_z_lattice(shape, {m.n, m.i + 1, m.j});
  return slots;
}

std::vector<std::string> z_site_classes(SystemShape shape, const Site& m) {
  const bool j_lo = m.j == 1;
  const bool j_hi = m.j == shape.k;
  const bool i_lo = m.i == m.j + 1;
  const bool i_hi = m.i == m.j + shape.r;
  std::vector<std::string> classes;
  if (!j_lo && !j_hi && !i_lo && !i_hi) classes.emplace_back("interior");
  if (j_lo) classes.emplace_back("j=1");
  if (j_hi) classes.emplace_back("j=k");
  if (i_lo) classes.emplace_back("i=j+1");
  if (i_hi) classes.emplace_back("i=j+r");
  if (j_lo && i_lo) classes.emplace_back("j=1,i=j+1");
  if (j_lo && i_hi) classes.emplace_back("j=1,i=j+r");
  if (j_hi && i_lo) classes.emplace_back("j=k,i=j+1");
  if (j_hi && i_hi) classes.emplace_back("j=k,i=j+r");
  return classes;
}

namespace {

const Rational& need(const ZState& state, const Site& s) {
  const Rational* v = state.find(s);
  if (v == nullptr) throw MissingNeighbor("no z value at " + to_string(s));
  return *v;
}

Rational reciprocal_slot(const Rational& z, const Site& s) {
  const Rational denom = Rational(1) - z.inverse();
  if (denom.is_zero()) throw DegenerateFactor("z == 1 in a denominator slot at " + to_string(s));
  return denom.inverse();
}

}  // namespace

Rational z_relation_rhs(const ZState& state, const Site& m) {
  const ZSlots slots = z_relation_slots(state.shape(), m);
  Rational rhs(1);
  if (slots.north_minus) rhs *= Rational(1) - need(state, {m.n, m.i - 1, m.j - 1});
  if (slots.north) {
    const Site s{m.n, m.i - 1, m.j};
    rhs *= reciprocal_slot(need(state, s), s);
  }
  if (slots.south_plus) rhs *= Rational(1) - need(state, {m.n, m.i + 1, m.j + 1});
  if (slots.south) {
    const Site s{m.n, m.i + 1, m.j};
    rhs *= reciprocal_slot(need(state, s), s);
  }
  return rhs;
}

Report z_relation_check(const ZState& state) {
  Report report;
  const SystemShape shape = state.shape();
  for (const auto& [west, z_west] : state.values()) {
    const Site m{west.n + 1, west.i, west.j};
    const Rational* z_east = state.find({west.n + 2, west.i, west.j});
    if (z_east == nullptr) continue;
    const Rational lhs = z_west * *z_east;
    Rational rhs;
    bool defined = true;
    try {
      rhs = z_relation_rhs(state, m);
    } catch (const MissingNeighbor&) {
      continue;
    } catch (const DegenerateFactor&) {
      defined = false;
    } catch (const DivisionByZero&) {
      defined = false;
    }
    const bool ok = defined && lhs == rhs;
    report.record("z-relations", shape, ok, to_string(m), defined ? rhs.to_string() : "undefined",
                  lhs.to_string());
    for (const std::string& cls : z_site_classes(shape, m)) {
      report.tally("z-class:" + cls, shape, ok);
    }
  }
  return report;
}

Report z_sigma_hat_check(const ZState& state) {
  Report report;
  const SystemShape shape = state.shape();
  for (const auto& [s, z] : state.values()) {
    const Site image = sigma_hat(shape, s);
    const Rational* z_image = state.find(image);
    if (z_image == nullptr) continue;
    report.record("z-sigma", shape, *z_image == z, to_string(s) + "->" + to_string(image),
                  z.to_string(), z_image->to_string());
  }
  return report;
}

}  // namespace yperiod
