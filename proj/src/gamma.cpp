#include "yperiod/gamma.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "yperiod/errors.hpp"
#include "yperiod/y_system.hpp"

namespace yperiod {

PlanePoint EdgeRef::tail() const {
  if (kind == EdgeKind::X) return {position.n - 1, position.i};
  return {position.n, position.i + 1};
}

PlanePoint EdgeRef::head() const {
  if (kind == EdgeKind::X) return {position.n, position.i + 1};
  return {position.n + 1, position.i};
}

namespace {

std::string key_string(char name, const EdgeKey& key) {
  return std::string(1, name) + "_" + std::to_string(key.j) + "(" + std::to_string(key.n) + "," +
         std::to_string(key.i) + ")";
}

}  // namespace

GammaState::GammaState(SystemShape shape) : shape_(shape), ranges_(gamma_ranges(shape)) {}

const Rational* GammaState::x(int j, int n, int i) const {
  const auto it = x_.find({j, n, i});
  return it == x_.end() ? nullptr : &it->second;
}

const Rational* GammaState::a(int j, int n, int i) const {
  const auto it = a_.find({j, n, i});
  return it == a_.end() ? nullptr : &it->second;
}

void GammaState::set_x(const EdgeKey& key, Rational value) {
  if ((key.n + key.i) % 2 != 0 || !ranges_.x_valid(key.j, key.i)) {
    throw std::invalid_argument("no variable " + key_string('x', key));
  }
  x_[key] = std::move(value);
}

void GammaState::set_a(const EdgeKey& key, Rational value) {
  if ((key.n + key.i) % 2 != 0 || !ranges_.a_valid(key.j, key.i)) {
    throw std::invalid_argument("no variable " + key_string('a', key));
  }
  if (value.is_zero()) throw DegenerateValue("zero value for " + key_string('a', key));
  a_[key] = std::move(value);
}

void GammaState::overwrite_unchecked(EdgeKind kind, const EdgeKey& key, Rational value) {
  (kind == EdgeKind::X ? x_ : a_)[key] = std::move(value);
}

IntRange GammaState::n_range() const {
  IntRange out{0, -1};
  bool first = true;
  for (const auto* m : {&x_, &a_}) {
    for (const auto& [key, v] : *m) {
      if (first) {
        out = {key.n, key.n};
        first = false;
      }
      out.lo = std::min(out.lo, key.n);
      out.hi = std::max(out.hi, key.n);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const VarRef& v) {
  static const char* names[] = {"x", "a", "a'", "x'"};
  return std::string(names[static_cast<int>(v.family)]) + "_" + std::to_string(v.j);
}

SquareSlots SquareSlots::empty(int k) {
  SquareSlots s;
  s.x.resize(k);
  s.a.resize(k + 1);
  s.a_prime.resize(k + 1);
  s.x_prime.resize(k);
  return s;
}

namespace {

template <typename Vec>
auto& pick(Vec& x, Vec& a, Vec& ap, Vec& xp, Family f) {
  switch (f) {
    case Family::X: return x;
    case Family::A: return a;
    case Family::APrime: return ap;
    case Family::XPrime: return xp;
  }
  throw std::logic_error("bad family");
}

}  // namespace

std::optional<Rational>& SquareSlots::at(const VarRef& v) {
  return pick(x, a, a_prime, x_prime, v.family).at(v.j - 1);
}

const std::optional<Rational>& SquareSlots::at(const VarRef& v) const {
  return const_cast<SquareSlots*>(this)->at(v);
}

bool SquareRules::defined(const VarRef& v) const {
  const auto& flags = pick(x_defined, a_defined, a_prime_defined, x_prime_defined, v.family);
  return v.j >= 1 && v.j <= static_cast<int>(flags.size()) && flags[v.j - 1];
}

SquareRules SquareRules::full(int k) {
  SquareRules rules;
  rules.k = k;
  rules.x_defined.assign(k, true);
  rules.x_prime_defined.assign(k, true);
  rules.a_defined.assign(k + 1, true);
  rules.a_prime_defined.assign(k + 1, true);
  rules.additive.assign(k + 1, true);
  rules.multiplicative.assign(k, true);
  return rules;
}

SquareRules square_rules(SystemShape shape, int row) {
  const GammaRanges ranges = gamma_ranges(shape);
  const int k = shape.k;
  SquareRules rules;
  rules.k = k;
  rules.row = row;
  for (int j = 1; j <= k; ++j) {
    rules.x_defined.push_back(ranges.x_valid(j, row));
    rules.x_prime_defined.push_back(ranges.x_valid(j, row - 1));
    rules.multiplicative.push_back(j + 1 <= row && row <= j + shape.r);
  }
  for (int j = 1; j <= k + 1; ++j) {
    rules.a_defined.push_back(ranges.a_valid(j, row));
    rules.a_prime_defined.push_back(ranges.a_valid(j, row - 1));
    rules.additive.push_back(j <= row && row <= j + shape.r);
  }
  return rules;
}

namespace {

struct Term {
  int sign = 1;
  std::vector<VarRef> vars;
};

struct Equation {
  std::string label;
  std::vector<Term> terms;
  bool derived = false;
};

// Terms whose variables are undefined are dropped.
void add_term(const SquareRules& rules, Equation& eq, int sign, std::vector<VarRef> vars) {
  for (const VarRef& v : vars) {
    if (!rules.defined(v)) return;
  }
  eq.terms.push_back({sign, std::move(vars)});
}

std::vector<Equation> build_equations(const SquareRules& rules, bool with_derived) {
  using F = Family;
  std::vector<Equation> eqs;
  const int k = rules.k;
  for (int j = 1; j <= k + 1; ++j) {
    if (!rules.additive[j - 1]) continue;
    Equation eq{"A_" + std::to_string(j), {}, false};
    add_term(rules, eq, 1, {{F::X, j}});
    add_term(rules, eq, 1, {{F::A, j}});
    add_term(rules, eq, -1, {{F::APrime, j}});
    add_term(rules, eq, -1, {{F::XPrime, j - 1}});
    eqs.push_back(std::move(eq));
  }
  for (int j = 1; j <= k; ++j) {
    if (!rules.multiplicative[j - 1]) continue;
    Equation eq{"M_" + std::to_string(j), {}, false};
    add_term(rules, eq, 1, {{F::X, j}, {F::A, j + 1}});
    add_term(rules, eq, -1, {{F::APrime, j}, {F::XPrime, j}});
    eqs.push_back(std::move(eq));
  }
  if (!with_derived) return eqs;
  // x_j * A_{j+1} combined with M_j eliminates a_{j+1}.
  for (int j = 1; j <= k; ++j) {
    if (!rules.multiplicative[j - 1] || !rules.additive[j]) continue;
    Equation eq{"E_" + std::to_string(j), {}, true};
    add_term(rules, eq, 1, {{F::APrime, j}, {F::XPrime, j}});
    add_term(rules, eq, -1, {{F::X, j}, {F::XPrime, j}});
    add_term(rules, eq, -1, {{F::X, j}, {F::APrime, j + 1}});
    add_term(rules, eq, 1, {{F::X, j}, {F::X, j + 1}});
    eqs.push_back(std::move(eq));
  }
  return eqs;
}

Rational evaluate(const Equation& eq, const SquareSlots& slots) {
  Rational sum;
  for (const Term& t : eq.terms) {
    Rational prod(t.sign);
    for (const VarRef& v : t.vars) prod *= *slots.at(v);
    sum += prod;
  }
  return sum;
}

std::set<VarRef> unknowns_of(const Equation& eq, const SquareSlots& slots) {
  std::set<VarRef> out;
  for (const Term& t : eq.terms) {
    for (const VarRef& v : t.vars) {
      if (!slots.at(v)) out.insert(v);
    }
  }
  return out;
}

// Every equation is affine in each single variable.
Rational solve_for(const Equation& eq, const SquareSlots& slots, const VarRef& u) {
  Rational coef, constant;
  for (const Term& t : eq.terms) {
    Rational prod(t.sign);
    bool has_u = false;
    for (const VarRef& v : t.vars) {
      if (v == u) {
        has_u = true;
      } else {
        prod *= *slots.at(v);
      }
    }
    (has_u ? coef : constant) += prod;
  }
  if (coef.is_zero()) throw DegenerateSolve("vanishing divisor solving " + eq.label + " for " + to_string(u));
  return -constant / coef;
}

std::vector<VarRef> defined_vars(const SquareRules& rules) {
  std::vector<VarRef> out;
  for (Family f : {Family::X, Family::A, Family::APrime, Family::XPrime}) {
    const int count = (f == Family::X || f == Family::XPrime) ? rules.k : rules.k + 1;
    for (int j = 1; j <= count; ++j) {
      if (rules.defined({f, j})) out.push_back({f, j});
    }
  }
  return out;
}

}  // namespace

SquareSolve solve_square(const SquareRules& rules, SquareSlots slots, Rng* rng, std::uint32_t bound) {
  const std::vector<Equation> eqs = build_equations(rules, true);
  SquareSolve out;
  for (;;) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const Equation& eq : eqs) {
        const std::set<VarRef> unknown = unknowns_of(eq, slots);
        if (unknown.size() != 1) continue;
        const VarRef u = *unknown.begin();
        slots.at(u) = solve_for(eq, slots, u);
        progress = true;
      }
    }
    // Stuck: free the first unknown of an equation that still has some,
    // otherwise any unknown that no equation mentions.
    std::optional<VarRef> choice;
    for (const Equation& eq : eqs) {
      const std::set<VarRef> unknown = unknowns_of(eq, slots);
      if (!unknown.empty()) {
        choice = *unknown.begin();
        break;
      }
    }
    if (!choice) {
      for (const VarRef& v : defined_vars(rules)) {
        if (!slots.at(v)) {
          choice = v;
          break;
        }
      }
    }
    if (!choice) break;
    if (rng == nullptr) throw std::invalid_argument("square is underdetermined at " + to_string(*choice));
    Rational value = sample_positive(*rng, bound);
    slots.at(*choice) = value;
    out.free_choices.emplace_back(*choice, std::move(value));
  }
  for (const Equation& eq : eqs) {
    const Rational residual = evaluate(eq, slots);
    if (!residual.is_zero()) {
      throw InconsistentKnowns(eq.label + " has residual " + residual.to_string());
    }
  }
  out.values = std::move(slots);
  return out;
}

SquareSolve square_relations(const SquareRules& rules, SquareSlots knowns, SquareMode mode, Rng* rng,
                             std::uint32_t bound) {
  auto clear = [](std::vector<std::optional<Rational>>& v) {
    for (auto& e : v) e.reset();
  };
  if (mode == SquareMode::South) {
    clear(knowns.a_prime);
  } else {
    clear(knowns.a);
  }
  clear(knowns.x_prime);
  for (const VarRef& v : defined_vars(rules)) {
    if (!knowns.at(v) && (v.family == Family::X || v.family == (mode == SquareMode::South ? Family::A : Family::APrime))) {
      throw std::invalid_argument("missing known " + to_string(v));
    }
  }
  return solve_square(rules, std::move(knowns), rng, bound);
}

std::vector<std::pair<std::string, Rational>> square_residuals(const SquareRules& rules,
                                                               const SquareSlots& slots) {
  std::vector<std::pair<std::string, Rational>> out;
  for (const Equation& eq : build_equations(rules, false)) {
    if (!unknowns_of(eq, slots).empty()) {
      throw std::invalid_argument("square has an unknown in " + eq.label);
    }
    out.emplace_back(eq.label, evaluate(eq, slots));
  }
  return out;
}

SquareSlots square_slots(const GammaState& state, PlanePoint c) {
  const int k = state.shape().k;
  SquareSlots s = SquareSlots::empty(k);
  auto load = [](std::optional<Rational>& slot, const Rational* v) {
    if (v != nullptr) slot = *v;
  };
  for (int j = 1; j <= k; ++j) {
    load(s.x[j - 1], state.x(j, c.n, c.i));
    load(s.x_prime[j - 1], state.x(j, c.n + 1, c.i - 1));
  }
  for (int j = 1; j <= k + 1; ++j) {
    load(s.a[j - 1], state.a(j, c.n, c.i));
    load(s.a_prime[j - 1], state.a(j, c.n - 1, c.i - 1));
  }
  return s;
}

bool square_complete(const GammaState& state, PlanePoint c) {
  const SquareRules rules = square_rules(state.shape(), c.i);
  const SquareSlots slots = square_slots(state, c);
  for (const VarRef& v : defined_vars(rules)) {
    if (!slots.at(v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

int default_gamma_columns(SystemShape shape) { return 2 * shape.half_period() + 2; }

namespace {

void check_generic(const GammaState& st) {
  const SystemShape shape = st.shape();
  for (const auto& [key, x] : st.xs()) {
    if (x.is_zero()) throw DegenerateValue("zero value for " + key_string('x', key));
    if (!in_z_lattice(shape, {key.n, key.i, key.j})) continue;
    const Rational* ap = st.a(key.j, key.n - 1, key.i - 1);
    if (ap != nullptr && *ap == x) throw DegenerateValue("z == 1 at " + key_string('x', key));
  }
}

GammaState generate_once(SystemShape shape, int n_cols, Rng& rng, std::uint32_t bound) {
  GammaState st(shape);
  const GammaRanges& ranges = st.ranges();
  const int k = shape.k;
  const int rows = shape.r + k + 1;
  for (int i = 1; i < rows; ++i) {
    for (int j = 1; j <= k + 1; ++j) {
      if (i % 2 == 0 && ranges.a_valid(j, i)) st.set_a({j, 0, i}, sample_positive(rng, bound));
      if (i % 2 == 1 && j <= k && ranges.x_valid(j, i)) st.set_x({j, 1, i}, sample_positive(rng, bound));
    }
  }
  for (int cn = 1; cn <= n_cols; ++cn) {
    for (int c = 1; c <= rows; ++c) {
      if ((cn + c) % 2 != 0) continue;
      const SquareRules rules = square_rules(shape, c);
      SquareSolve solved = square_relations(rules, square_slots(st, {cn, c}), SquareMode::West, &rng, bound);
      for (int j = 1; j <= k; ++j) {
        if (rules.x_prime_defined[j - 1]) st.set_x({j, cn + 1, c - 1}, *solved.values.x_prime[j - 1]);
      }
      for (int j = 1; j <= k + 1; ++j) {
        if (rules.a_defined[j - 1]) st.set_a({j, cn, c}, *solved.values.a[j - 1]);
      }
      for (auto& [var, value] : solved.free_choices) {
        const bool is_x = var.family == Family::X || var.family == Family::XPrime;
        const EdgeKey key = var.family == Family::XPrime ? EdgeKey{var.j, cn + 1, c - 1}
                            : var.family == Family::APrime ? EdgeKey{var.j, cn - 1, c - 1}
                                                           : EdgeKey{var.j, cn, c};
        st.add_free_choice({is_x ? EdgeKind::X : EdgeKind::A, key, std::move(value)});
      }
    }
  }
  check_generic(st);
  return st;
}

}  // namespace

GeneratedGamma generate(SystemShape shape, int n_cols, Rng& rng, std::uint32_t bound) {
  require_gamma_shape(shape);
  if (n_cols < 1) throw std::invalid_argument("n_cols must be positive");
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    try {
      return {generate_once(shape, n_cols, rng, bound), attempt};
    } catch (const DegenerateSolve&) {
    } catch (const DegenerateValue&) {
    } catch (const DivisionByZero&) {
    }
  }
  throw SeedExhausted("no generic Gamma state for shape " + shape.label() + " after " +
                      std::to_string(kMaxRetries) + " reseeds");
}

// ---------------------------------------------------------------------------

namespace {

void require_regular_row(const GammaState& state, int n, int i) {
  const SystemShape shape = state.shape();
  if ((n + i) % 2 != 0 || i < shape.k || i > shape.r + 1) {
    throw NotRegular("no regular edge at " + to_string(PlanePoint{n, i}));
  }
}

const Rational& need(const Rational* v, char name, const EdgeKey& key) {
  if (v == nullptr) throw InsufficientWindow(key_string(name, key) + " is not stored");
  return *v;
}

}  // namespace

SquareMatrix build_X(const GammaState& state, int n, int i) {
  require_regular_row(state, n, i);
  const int k = state.shape().k;
  SquareMatrix m = SquareMatrix::identity(k + 1);
  for (int j = 1; j <= k; ++j) m(j - 1, j) = need(state.x(j, n, i), 'x', {j, n, i});
  return m;
}

SquareMatrix build_A(const GammaState& state, int n, int i) {
  require_regular_row(state, n, i);
  const int k = state.shape().k;
  SquareMatrix m(k + 1);
  for (int j = 1; j <= k + 1; ++j) m(j - 1, j - 1) = need(state.a(j, n, i), 'a', {j, n, i});
  for (int j = 1; j <= k; ++j) m(j, j - 1) = Rational(1);
  return m;
}

namespace {

template <typename Fn>
void for_each_complete_square(const GammaState& state, Fn&& fn) {
  const IntRange ns = state.n_range();
  const int rows = state.shape().r + state.shape().k + 1;
  for (int cn = ns.lo; cn <= ns.hi; ++cn) {
    for (int c = 1; c <= rows; ++c) {
      if ((cn + c) % 2 != 0 || !square_complete(state, {cn, c})) continue;
      fn(PlanePoint{cn, c});
    }
  }
}

bool is_regular_centre(SystemShape shape, int row) { return shape.k + 1 <= row && row <= shape.r + 1; }

}  // namespace

Report check_flatness(const GammaState& state) {
  Report report;
  const SystemShape shape = state.shape();
  for_each_complete_square(state, [&](PlanePoint c) {
    const SquareRules rules = square_rules(shape, c.i);
    std::string failed;
    for (const auto& [label, residual] : square_residuals(rules, square_slots(state, c))) {
      if (!residual.is_zero()) failed += (failed.empty() ? "" : " ") + label + "=" + residual.to_string();
    }
    if (is_regular_centre(shape, c.i)) {
      const SquareMatrix lhs = build_X(state, c.n, c.i) * build_A(state, c.n, c.i);
      const SquareMatrix rhs = build_A(state, c.n - 1, c.i - 1) * build_X(state, c.n + 1, c.i - 1);
      if (lhs != rhs) {
        report.record("flatness", shape, false, "square " + to_string(c), rhs.to_string(), lhs.to_string());
        return;
      }
    }
    report.record("flatness", shape, failed.empty(), "square " + to_string(c), "0", failed);
  });
  return report;
}

ZState z_from_gamma(const GammaState& state) {
  ZState z(state.shape(), ZProvenance::FromGamma);
  for (const auto& [key, x] : state.xs()) {
    const Site s{key.n, key.i, key.j};
    if (!in_z_lattice(state.shape(), s)) continue;
    const Rational* ap = state.a(key.j, key.n - 1, key.i - 1);
    if (ap == nullptr) continue;
    z.set(s, x / *ap);
  }
  return z;
}

Report check_z_ratio_relations(const GammaState& state) {
  Report report;
  const SystemShape shape = state.shape();
  const int k = shape.k;
  for_each_complete_square(state, [&](PlanePoint c) {
    if (!is_regular_centre(shape, c.i)) return;
    const SquareSlots s = square_slots(state, c);
    auto z = [&](int j) { return *s.x[j - 1] / *s.a_prime[j - 1]; };
    for (int j = 1; j <= k + 1; ++j) {
      const Rational ratio = *s.a_prime[j - 1] / *s.a[j - 1];
      Rational lhs;
      if (j == 1) {
        const Rational d = Rational(1) - z(1);
        if (d.is_zero()) continue;
        lhs = d.inverse();
      } else if (j == k + 1) {
        lhs = Rational(1) - z(k);
      } else {
        const Rational d = Rational(1) - z(j);
        if (d.is_zero()) continue;
        lhs = (Rational(1) - z(j - 1)) / d;
      }
      report.record("z-ratio", shape, lhs == ratio, "square " + to_string(c) + " j=" + std::to_string(j),
                    ratio.to_string(), lhs.to_string());
    }
  });
  return report;
}

Report check_xpera(const GammaState& state) {
  Report report;
  const SystemShape shape = state.shape();
  for_each_complete_square(state, [&](PlanePoint c) {
    const SquareRules rules = square_rules(shape, c.i);
    const SquareSlots s = square_slots(state, c);
    for (int j = 2; j <= shape.k; ++j) {
      if (!rules.additive[j - 1] || !rules.x_defined[j - 1] || !rules.a_defined[j - 1] ||
          !rules.a_prime_defined[j - 1] || !rules.x_prime_defined[j - 2]) {
        continue;
      }
      const Rational& x = *s.x[j - 1];
      const Rational& a = *s.a[j - 1];
      const Rational& ap = *s.a_prime[j - 1];
      const Rational& xpm = *s.x_prime[j - 2];
      if (x.is_zero() || ap == x) continue;
      const Rational lhs = (Rational(1) - xpm / a) / (Rational(1) - ap / x);
      const Rational rhs = -x / a;
      report.record("xpera", shape, lhs == rhs, "square " + to_string(c) + " j=" + std::to_string(j),
                    rhs.to_string(), lhs.to_string());
    }
  });
  return report;
}

}  // namespace yperiod
