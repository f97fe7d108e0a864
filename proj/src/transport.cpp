#include "yperiod/transport.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "yperiod/errors.hpp"

namespace yperiod {

EdgeRef edge_for(PlanePoint from, Step step) {
  if (step == Step::Up) return {EdgeKind::A, {from.n, from.i - 1}};
  return {EdgeKind::X, {from.n + 1, from.i}};
}

PlanePoint Path::end() const {
  PlanePoint p = start;
  for (Step s : steps) p = edge_for(p, s).head();
  return p;
}

std::vector<EdgeRef> Path::edges() const {
  std::vector<EdgeRef> out;
  PlanePoint p = start;
  for (Step s : steps) {
    out.push_back(edge_for(p, s));
    p = out.back().head();
  }
  return out;
}

bool is_regular_vertex(SystemShape shape, PlanePoint p) {
  return (p.n + p.i) % 2 != 0 && shape.k <= p.i && p.i <= shape.r + 2;
}

SquareMatrix edge_matrix(const GammaState& state, const EdgeRef& edge) {
  if (edge.kind == EdgeKind::X) return build_X(state, edge.position.n, edge.position.i);
  return build_A(state, edge.position.n, edge.position.i);
}

SquareMatrix parallel_transport(const GammaState& state, const Path& path) {
  const SystemShape shape = state.shape();
  if (!is_regular_vertex(shape, path.start)) {
    throw NotRegular("path starts off the regular band at " + to_string(path.start));
  }
  SquareMatrix m = SquareMatrix::identity(shape.k + 1);
  for (const EdgeRef& e : path.edges()) {
    if (!is_regular_vertex(shape, e.head())) {
      throw NotRegular("path leaves the regular band at " + to_string(e.head()));
    }
    m = m * edge_matrix(state, e);
  }
  return m;
}

SquareMatrix parallel_transport(const GammaState& state, PlanePoint from, PlanePoint to, const Path& path) {
  if (path.start != from || path.end() != to) {
    throw std::invalid_argument("path does not run from " + to_string(from) + " to " + to_string(to));
  }
  return parallel_transport(state, path);
}

Path northern_path(SystemShape shape, PlanePoint p) {
  Path path{p, {}};
  for (int t = p.i; t > shape.k; --t) path.steps.push_back(Step::Up);
  for (int t = 0; t < shape.k; ++t) {
    path.steps.push_back(Step::Down);
    path.steps.push_back(Step::Up);
  }
  for (int t = p.i; t < shape.r + 2; ++t) path.steps.push_back(Step::Down);
  return path;
}

Path southern_path(SystemShape shape, PlanePoint p) {
  Path path{p, {}};
  for (int t = p.i; t < shape.r + 2; ++t) path.steps.push_back(Step::Down);
  for (int t = 0; t < shape.k; ++t) {
    path.steps.push_back(Step::Up);
    path.steps.push_back(Step::Down);
  }
  for (int t = p.i; t > shape.k; --t) path.steps.push_back(Step::Up);
  return path;
}

Path random_regular_path(SystemShape shape, PlanePoint from, PlanePoint to, Rng& rng) {
  const int len = to.n - from.n;
  const int rise = to.i - from.i;
  if (!is_regular_vertex(shape, from) || !is_regular_vertex(shape, to) || len < 0 ||
      std::abs(rise) > len || (len + rise) % 2 != 0) {
    throw std::invalid_argument("no regular path from " + to_string(from) + " to " + to_string(to));
  }
  int downs = (len + rise) / 2;
  int ups = len - downs;
  Path path{from, {}};
  int i = from.i;
  // Within the band, neither move can strand the walk short of `to`.
  while (ups + downs > 0) {
    const bool can_up = ups > 0 && i - 1 >= shape.k;
    const bool can_down = downs > 0 && i + 1 <= shape.r + 2;
    bool up = can_up;
    if (can_up && can_down) up = std::uniform_int_distribution<int>(0, ups + downs - 1)(rng) < ups;
    path.steps.push_back(up ? Step::Up : Step::Down);
    if (up) {
      --ups;
      --i;
    } else {
      --downs;
      ++i;
    }
  }
  return path;
}

// ---------------------------------------------------------------------------

SquareMatrix staircase_product(const GammaState& state, int n0, StaircaseSide side) {
  const SystemShape shape = state.shape();
  const int k = shape.k;
  SquareMatrix m = SquareMatrix::identity(k + 1);
  if (side == StaircaseSide::North) {
    if ((n0 + k) % 2 != 0) throw std::invalid_argument("northern staircase needs n0 + k even");
    for (int t = 0; t < k; ++t) {
      m = m * build_X(state, n0 + 2 * t, k) * build_A(state, n0 + 2 * t, k);
    }
  } else {
    if ((n0 + shape.r + 1) % 2 != 0) throw std::invalid_argument("southern staircase needs n0 + r + 1 even");
    for (int t = 0; t < k; ++t) {
      m = m * build_A(state, n0 + 2 * t, shape.r + 1) * build_X(state, n0 + 2 * t + 2, shape.r + 1);
    }
  }
  return m;
}

std::vector<int> staircase_origins(const GammaState& state, StaircaseSide side) {
  const SystemShape shape = state.shape();
  const IntRange ns = state.n_range();
  const int row = side == StaircaseSide::North ? shape.k : shape.r + 1;
  std::vector<int> out;
  for (int n0 = ns.lo; n0 <= ns.hi; ++n0) {
    if ((n0 + row) % 2 != 0) continue;
    try {
      staircase_product(state, n0, side);
      out.push_back(n0);
    } catch (const InsufficientWindow&) {
    }
  }
  return out;
}

Report check_staircases(const GammaState& state) {
  Report report;
  const SystemShape shape = state.shape();
  for (int n0 : staircase_origins(state, StaircaseSide::North)) {
    const SquareMatrix m = staircase_product(state, n0, StaircaseSide::North);
    report.record("staircase-north", shape, m.is_anti_lower_triangular(), "n0=" + std::to_string(n0),
                  "anti-lower-triangular", m.to_string());
  }
  for (int n0 : staircase_origins(state, StaircaseSide::South)) {
    const SquareMatrix m = staircase_product(state, n0, StaircaseSide::South);
    report.record("staircase-south", shape, m.is_anti_upper_triangular(), "n0=" + std::to_string(n0),
                  "anti-upper-triangular", m.to_string());
  }
  return report;
}

// ---------------------------------------------------------------------------

SigmaFactorizationK2 sigma_factorization_k2(const Rational& x1, const Rational& x2, const Rational& a1,
                                            const Rational& a2, const Rational& a3,
                                            const Rational& a1_prime, const Rational& x1_prime) {
  const Rational zero, one(1);
  SigmaFactorizationK2 f;
  f.lhs = SquareMatrix{{one, x1, zero}, {zero, one, x2}, {zero, zero, one}} *
          SquareMatrix{{a1, zero, zero}, {one, a2, zero}, {zero, one, a3}};
  f.left = {{a1_prime, zero, zero}, {one, x2, zero}, {zero, zero, one}};
  f.sigma_hat = {{one, zero, zero}, {zero, zero, a3}, {zero, one, a3}};
  f.right = {{one, x1_prime, zero}, {zero, one, zero}, {zero, zero, one}};
  return f;
}

namespace {

void require_k2(const GammaState& state) {
  if (state.shape().k != 2) {
    throw NotApplicable("the explicit factorization is only stated for k = 2, got k = " +
                        std::to_string(state.shape().k));
  }
}

const Rational& stored(const Rational* v, const std::string& what) {
  if (v == nullptr) throw InsufficientWindow(what + " is not stored");
  return *v;
}

}  // namespace

SigmaFactorizationK2 sigma_factorization_k2(const GammaState& state, int n) {
  require_k2(state);
  if (n % 2 != 0) throw std::invalid_argument("square centres in row 2 need n even");
  const std::string at = " near " + to_string(PlanePoint{n, 2});
  return sigma_factorization_k2(
      stored(state.x(1, n, 2), "x_1" + at), stored(state.x(2, n, 2), "x_2" + at),
      stored(state.a(1, n, 2), "a_1" + at), stored(state.a(2, n, 2), "a_2" + at),
      stored(state.a(3, n, 2), "a_3" + at), stored(state.a(1, n - 1, 1), "a'_1" + at),
      stored(state.x(1, n + 1, 1), "x'_1" + at));
}

Report sigma_factorization_check_k2(const GammaState& state) {
  require_k2(state);
  Report report;
  const IntRange ns = state.n_range();
  for (int n = ns.lo; n <= ns.hi; ++n) {
    if (n % 2 != 0) continue;
    SigmaFactorizationK2 f;
    try {
      f = sigma_factorization_k2(state, n);
    } catch (const InsufficientWindow&) {
      continue;
    }
    const SquareMatrix rhs = f.product();
    report.record("factorization-k2", state.shape(), f.lhs == rhs && f.sigma_hat(1, 1).is_zero(),
                  "square " + to_string(PlanePoint{n, 2}), rhs.to_string(), f.lhs.to_string());
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

void require_delta_endpoints(SystemShape shape, PlanePoint p) {
  if (!is_regular_vertex(shape, p) || !is_regular_vertex(shape, sigma_hat(shape, p))) {
    throw NotRegular(to_string(p) + " is not a regular vertex");
  }
}

bool path_stored(const GammaState& state, const Path& path) {
  for (const EdgeRef& e : path.edges()) {
    const int count = e.kind == EdgeKind::X ? state.shape().k : state.shape().k + 1;
    for (int j = 1; j <= count; ++j) {
      const Rational* v = e.kind == EdgeKind::X ? state.x(j, e.position.n, e.position.i)
                                                : state.a(j, e.position.n, e.position.i);
      if (v == nullptr) return false;
    }
  }
  return true;
}

}  // namespace

SquareMatrix delta(const GammaState& state, PlanePoint p) {
  require_delta_endpoints(state.shape(), p);
  return parallel_transport(state, northern_path(state.shape(), p));
}

std::vector<PlanePoint> delta_points(const GammaState& state) {
  const SystemShape shape = state.shape();
  const IntRange ns = state.n_range();
  std::vector<PlanePoint> out;
  for (int n = ns.lo - 1; n <= ns.hi; ++n) {
    for (int i = shape.k; i <= shape.r + 2; ++i) {
      const PlanePoint p{n, i};
      if (!is_regular_vertex(shape, p)) continue;
      if (path_stored(state, northern_path(shape, p)) && path_stored(state, southern_path(shape, p))) {
        out.push_back(p);
      }
    }
  }
  return out;
}

NorthernFactorization northern_factorization(const GammaState& state, PlanePoint p) {
  const SystemShape shape = state.shape();
  require_delta_endpoints(shape, p);
  const Path full = northern_path(shape, p);
  const int ups = p.i - shape.k;
  const auto begin = full.steps.begin();
  const Path leading{p, {begin, begin + ups}};
  const Path stairs{leading.end(), {begin + ups, begin + ups + 2 * shape.k}};
  const Path trailing{stairs.end(), {begin + ups + 2 * shape.k, full.steps.end()}};
  NorthernFactorization f;
  f.leading = parallel_transport(state, leading);
  f.staircase = parallel_transport(state, stairs);
  f.trailing = parallel_transport(state, trailing);
  f.staircase_origin = stairs.start.n + 1;
  return f;
}

Report check_deltas(const GammaState& state) {
  Report report;
  const SystemShape shape = state.shape();
  for (const PlanePoint& p : delta_points(state)) {
    const std::string where = "p=" + to_string(p);
    const SquareMatrix d = delta(state, p);
    report.record("delta", shape, d.is_anti_diagonal(), where, "anti-diagonal", d.to_string());
    const SquareMatrix south = parallel_transport(state, southern_path(shape, p));
    report.record("delta-paths", shape, south == d, where, d.to_string(), south.to_string());
    const NorthernFactorization f = northern_factorization(state, p);
    const bool ok = f.staircase.is_anti_lower_triangular() &&
                    f.staircase == staircase_product(state, f.staircase_origin, StaircaseSide::North) &&
                    f.leading * f.staircase * f.trailing == d;
    report.record("delta-factorization", shape, ok, where, d.to_string(), f.staircase.to_string());
  }
  return report;
}

Report check_path_independence(const GammaState& state, Rng& rng, int samples) {
  Report report;
  const SystemShape shape = state.shape();
  const std::vector<PlanePoint> starts = delta_points(state);
  if (starts.empty()) return report;
  std::uniform_int_distribution<std::size_t> pick(0, starts.size() - 1);
  for (int t = 0; t < samples; ++t) {
    // Any vertex on a delta path is reachable by paths that stay stored.
    const PlanePoint from = starts[pick(rng)];
    const int len = std::uniform_int_distribution<int>(1, shape.half_period())(rng);
    const Path reference = northern_path(shape, from);
    PlanePoint to = from;
    for (int s = 0; s < len; ++s) to = edge_for(to, reference.steps[s]).head();
    const Path p1 = random_regular_path(shape, from, to, rng);
    const Path p2 = random_regular_path(shape, from, to, rng);
    if (!path_stored(state, p1) || !path_stored(state, p2)) continue;
    const SquareMatrix m1 = parallel_transport(state, from, to, p1);
    const SquareMatrix m2 = parallel_transport(state, from, to, p2);
    report.record("path-independence", shape, m1 == m2, to_string(from) + "->" + to_string(to),
                  m1.to_string(), m2.to_string());
  }
  return report;
}

// ---------------------------------------------------------------------------

SquareFrame square_frame(const GammaState& state, PlanePoint c) {
  const SystemShape shape = state.shape();
  if ((c.n + c.i) % 2 != 0 || c.i < shape.k + 1 || c.i > shape.r + 1) {
    throw NotRegular("square " + to_string(c) + " is not regular");
  }
  const PlanePoint sc = sigma_hat(shape, c);
  SquareFrame f;
  f.centre = c;
  f.w = {c.n - 1, c.i};
  f.n = {c.n, c.i - 1};
  f.e = {c.n + 1, c.i};
  f.s = {c.n, c.i + 1};
  f.X = build_X(state, c.n, c.i);
  f.A = build_A(state, c.n, c.i);
  f.A_prime = build_A(state, c.n - 1, c.i - 1);
  f.X_prime = build_X(state, c.n + 1, c.i - 1);
  f.Y = build_X(state, sc.n, sc.i);
  f.B = build_A(state, sc.n, sc.i);
  f.B_prime = build_A(state, sc.n - 1, sc.i - 1);
  f.Y_prime = build_X(state, sc.n + 1, sc.i - 1);
  f.delta_w = delta(state, f.w);
  f.delta_n = delta(state, f.n);
  f.delta_e = delta(state, f.e);
  f.delta_s = delta(state, f.s);
  return f;
}

std::vector<PlanePoint> eligible_squares(const GammaState& state) {
  const SystemShape shape = state.shape();
  const IntRange ns = state.n_range();
  std::vector<PlanePoint> out;
  for (int n = ns.lo; n <= ns.hi; ++n) {
    for (int i = shape.k + 1; i <= shape.r + 1; ++i) {
      if ((n + i) % 2 != 0) continue;
      try {
        square_frame(state, {n, i});
        out.push_back({n, i});
      } catch (const InsufficientWindow&) {
      }
    }
  }
  return out;
}

Report check_transport_commutation(const GammaState& state, PlanePoint centre) {
  const SquareFrame f = square_frame(state, centre);
  Report report;
  const SystemShape shape = state.shape();
  const std::string where = "square " + to_string(centre);
  auto expect = [&](const char* name, const SquareMatrix& lhs, const SquareMatrix& rhs) {
    report.record("transport", shape, lhs == rhs, where + " " + name, rhs.to_string(), lhs.to_string());
  };
  expect("A'd(N)=d(W)Y", f.A_prime * f.delta_n, f.delta_w * f.Y);
  expect("Ad(E)=d(S)Y'", f.A * f.delta_e, f.delta_s * f.Y_prime);
  expect("Xd(S)=d(W)B'", f.X * f.delta_s, f.delta_w * f.B_prime);
  expect("X'd(E)=d(N)B", f.X_prime * f.delta_e, f.delta_n * f.B);
  return report;
}

Report check_diagonal_identity(const GammaState& state, PlanePoint centre) {
  const SquareFrame f = square_frame(state, centre);
  Report report;
  const SystemShape shape = state.shape();
  const std::string where = "square " + to_string(centre);
  auto expect = [&](const std::string& check, const std::string& name, const SquareMatrix& lhs,
                    const SquareMatrix& rhs) {
    report.record(check, shape, lhs == rhs, where + " " + name, rhs.to_string(), lhs.to_string());
  };
  expect("diagonal", "D(A')Dbar(d(N))=Dbar(d(W))",
         f.A_prime.diagonal_part() * f.delta_n.anti_diagonal_part(), f.delta_w.anti_diagonal_part());
  expect("diagonal", "D(A)Dbar(d(E))=Dbar(d(S))", f.A.diagonal_part() * f.delta_e.anti_diagonal_part(),
         f.delta_s.anti_diagonal_part());
  expect("diagonal", "Dbar(d(S))=Dbar(d(W))D(B')", f.delta_s.anti_diagonal_part(),
         f.delta_w.anti_diagonal_part() * f.B_prime.diagonal_part());
  expect("diagonal", "Dbar(d(E))=Dbar(d(N))D(B)", f.delta_e.anti_diagonal_part(),
         f.delta_n.anti_diagonal_part() * f.B.diagonal_part());

  const SquareMatrix w = SquareMatrix::longest_weyl(shape.k + 1);
  expect("w-conjugation", "D(A)D(A')^-1=wD(B')D(B)^-1w",
         f.A.diagonal_part() * f.A_prime.diagonal_part().diagonal_inverse(),
         w * f.B_prime.diagonal_part() * f.B.diagonal_part().diagonal_inverse() * w);

  const int k = shape.k;
  for (int j = 1; j <= k + 1; ++j) {
    const int m = k + 2 - j;
    const Rational lhs = f.A(j - 1, j - 1) / f.A_prime(j - 1, j - 1);
    const Rational rhs = f.B_prime(m - 1, m - 1) / f.B(m - 1, m - 1);
    report.record("ratio", shape, lhs == rhs, where + " j=" + std::to_string(j), rhs.to_string(),
                  lhs.to_string());
  }
  return report;
}

namespace {

// z_1..z_k of a square rebuilt from the diagonal ratios a'_j / a_j alone:
// a_1 = a'_1 (1 - z_1) and a_j (1 - z_{j-1}) = a'_j (1 - z_j).
std::vector<Rational> z_from_ratios(const SquareMatrix& a, const SquareMatrix& a_prime, int k) {
  std::vector<Rational> z(k);
  Rational one_minus(1);  // 1 - z_{j-1}, with z_0 = 0
  for (int j = 1; j <= k; ++j) {
    one_minus = one_minus * a(j - 1, j - 1) / a_prime(j - 1, j - 1);
    z[j - 1] = Rational(1) - one_minus;
  }
  return z;
}

}  // namespace

Report check_induced_z_invariance(const GammaState& state) {
  Report report;
  const SystemShape shape = state.shape();
  const int k = shape.k;
  const Report direct = z_sigma_hat_check(z_from_gamma(state));
  // z_sigma_hat_check records only failures, so everything it checked and
  // did not flag passed.
  std::set<std::string> failed_pairs;
  for (const Violation& v : direct.violations()) failed_pairs.insert(v.where);
  const bool truncated_log = direct.violations().size() >= Report::kMaxViolations;

  for (const PlanePoint& c : eligible_squares(state)) {
    const SquareFrame f = square_frame(state, c);
    const auto here = z_from_ratios(f.A, f.A_prime, k);
    const auto image = z_from_ratios(f.B, f.B_prime, k);
    for (int j = 1; j <= k; ++j) {
      const bool induced = here[j - 1] == image[k - j];
      const Site s{c.n, c.i, j};
      const Site t = sigma_hat(shape, s);
      const std::string pair = to_string(s) + "->" + to_string(t);
      report.record("z-induced", shape, induced, pair, here[j - 1].to_string(), image[k - j].to_string());
      if (truncated_log) continue;
      const bool checked_directly = state.x(j, s.n, s.i) && state.a(j, s.n - 1, s.i - 1) &&
                                    state.x(t.j, t.n, t.i) && state.a(t.j, t.n - 1, t.i - 1);
      if (!checked_directly) continue;
      const bool direct_ok = !failed_pairs.contains(pair);
      report.record("z-induced-agreement", shape, direct_ok == induced, pair,
                    induced ? "invariant" : "not invariant", direct_ok ? "invariant" : "not invariant");
    }
  }
  return report;
}

Report check_sigma_chain(const GammaState& state) {
  Report report;
  for (const PlanePoint& c : eligible_squares(state)) {
    report.merge(check_transport_commutation(state, c));
    report.merge(check_diagonal_identity(state, c));
  }
  return report;
}

}  // namespace yperiod
