#pragma once

// The truncated Gamma-system: edge variables x_j(n, i) (southeast edges) and
// a_j(n, i) (northeast edges), stored for n + i even. Vertices of the graph
// are the points (n, i) with n + i odd:
//
//   x-edge at (n, i):  (n - 1, i) -> (n, i + 1)
//   a-edge at (n, i):  (n, i + 1) -> (n + 1, i)
//
// A square is named by its centre c = (n, i), n + i even. Its corners are
// W = (n-1, i), N = (n, i-1), E = (n+1, i), S = (n, i+1) and its edges are
//
//   X  = x(n, i)          W -> S
//   A  = a(n, i)          S -> E
//   A' = a(n-1, i-1)      W -> N
//   X' = x(n+1, i-1)      N -> E
//
// Flatness XA = A'X' reads entrywise, for the row i of the centre,
//
//   additive  A_j:  x_j + a_j = a'_j + x'_{j-1}     (j = 1 .. k+1)
//   product   M_j:  x_j a_{j+1} = a'_j x'_j         (j = 1 .. k)
//
// Truncation drops every additive term whose variable is undefined; A_j is
// imposed for j <= i <= j + r and M_j for j + 1 <= i <= j + r.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yperiod/lattice.hpp"
#include "yperiod/matrix.hpp"
#include "yperiod/rational.hpp"
#include "yperiod/report.hpp"
#include "yperiod/z_system.hpp"

namespace yperiod {

enum class EdgeKind { X, A };

struct EdgeKey {
  int j = 0;
  int n = 0;
  int i = 0;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct EdgeRef {
  EdgeKind kind = EdgeKind::X;
  PlanePoint position;

  PlanePoint tail() const;
  PlanePoint head() const;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct FreeChoice {
  EdgeKind kind = EdgeKind::A;
  EdgeKey key;
  Rational value;
  friend bool operator==(const FreeChoice&, const FreeChoice&) = default;
};

class GammaState {
 public:
  // Throws ShapeUnsupported if r < k.
  explicit GammaState(SystemShape shape);

  SystemShape shape() const { return shape_; }
  const GammaRanges& ranges() const { return ranges_; }

  const Rational* x(int j, int n, int i) const;
  const Rational* a(int j, int n, int i) const;
  const std::map<EdgeKey, Rational>& xs() const { return x_; }
  const std::map<EdgeKey, Rational>& as() const { return a_; }
  const std::vector<FreeChoice>& free_choices() const { return free_; }

  // Both reject keys outside the validity ranges or with n + i odd
  // (std::invalid_argument); set_a also rejects zero (DegenerateValue).
  void set_x(const EdgeKey& key, Rational value);
  void set_a(const EdgeKey& key, Rational value);
  void add_free_choice(FreeChoice choice) { free_.push_back(std::move(choice)); }

  void overwrite_unchecked(EdgeKind kind, const EdgeKey& key, Rational value);

  // Interval of n covered by stored a or x values.
  IntRange n_range() const;

  friend bool operator==(const GammaState& l, const GammaState& r) {
    return l.shape_ == r.shape_ && l.x_ == r.x_ && l.a_ == r.a_ && l.free_ == r.free_;
  }

 private:
  SystemShape shape_;
  GammaRanges ranges_;
  std::map<EdgeKey, Rational> x_;
  std::map<EdgeKey, Rational> a_;
  std::vector<FreeChoice> free_;
};

// ---------------------------------------------------------------------------
// One square of the graph.

enum class Family { X, A, APrime, XPrime };

struct VarRef {
  Family family = Family::X;
  int j = 1;
  friend auto operator<=>(const VarRef&, const VarRef&) = default;
};

std::string to_string(const VarRef& v);

// Values of the four edge families of a square, indexed by j - 1.
// x and x_prime have k entries, a and a_prime have k + 1.
struct SquareSlots {
  std::vector<std::optional<Rational>> x, a, a_prime, x_prime;

  static SquareSlots empty(int k);
  std::optional<Rational>& at(const VarRef& v);
  const std::optional<Rational>& at(const VarRef& v) const;
};

// Which variables exist and which relations hold in a square.
struct SquareRules {
  int k = 1;
  int row = 0;  // i of the centre; 0 for the untruncated rules
  std::vector<bool> x_defined, a_defined, a_prime_defined, x_prime_defined;
  std::vector<bool> additive;        // A_1 .. A_{k+1}
  std::vector<bool> multiplicative;  // M_1 .. M_k

  bool defined(const VarRef& v) const;
  // All variables and all 2k + 1 relations: the full matrix identity.
  static SquareRules full(int k);
};

// Rules of the square whose centre lies in row `row` of the truncated system.
SquareRules square_rules(SystemShape shape, int row);

enum class SquareMode {
  South,  // knowns X, A; solve A', X'
  West,   // knowns X, A'; solve A, X'
};

struct SquareSolve {
  SquareSlots values;
  std::vector<std::pair<VarRef, Rational>> free_choices;
};

// Solves every defined slot that is still empty. Relations with a single
// unknown are solved one at a time; the derived relation
// (a'_j - x_j) x'_j = x_j (a'_{j+1} - x_{j+1}) couples the west-pair unknowns.
// Slots left undetermined are drawn from sample_positive and logged.
// Throws DegenerateSolve on a vanishing divisor, InconsistentKnowns when the
// givens violate a relation, std::invalid_argument if a free choice is needed
// but `rng` is null.
SquareSolve solve_square(const SquareRules& rules, SquareSlots slots, Rng* rng = nullptr,
                         std::uint32_t bound = 10);

// Clears the families that `mode` treats as unknown and solves.
SquareSolve square_relations(const SquareRules& rules, SquareSlots knowns, SquareMode mode,
                             Rng* rng = nullptr, std::uint32_t bound = 10);

// Residuals (lhs - rhs) of every imposed relation, labelled "A_j" / "M_j".
// Every defined slot must hold a value.
std::vector<std::pair<std::string, Rational>> square_residuals(const SquareRules& rules,
                                                               const SquareSlots& slots);

// Stored values of the square centred at c; nullopt where not stored.
SquareSlots square_slots(const GammaState& state, PlanePoint centre);
// True when every defined slot of the square is stored.
bool square_complete(const GammaState& state, PlanePoint centre);

// ---------------------------------------------------------------------------

// 2(r+k+2)+2 square columns.
int default_gamma_columns(SystemShape shape);

struct GeneratedGamma {
  GammaState state;
  int retries = 0;
};

// Seeds a_j(0, i) (i even) and x_j(1, i) (i odd) with sample_positive, then
// solves square columns 1 .. n_cols eastward with the west-pair solve. Trials
// where a divisor vanishes or an x, a, or z = x/a' comes out as 0 (or z = 1)
// are reseeded, at most kMaxRetries times; then SeedExhausted.
GeneratedGamma generate(SystemShape shape, int n_cols, Rng& rng, std::uint32_t bound);

// The (k+1)x(k+1) edge matrices of a regular row k <= i <= r+1:
// X = I + sum x_j E_{j,j+1}, A = sum a_j E_{j,j} + sum E_{j+1,j}.
// NotRegular outside the regular rows or for n + i odd; InsufficientWindow
// when an entry is not stored.
SquareMatrix build_X(const GammaState& state, int n, int i);
SquareMatrix build_A(const GammaState& state, int n, int i);

// "flatness": every complete square satisfies its relations; regular squares
// (centre rows k+1 .. r+1) additionally XA == A'X' as matrices.
Report check_flatness(const GammaState& state);

// z_j(n, i) = x_j(n, i) / a_j(n-1, i-1) wherever both are stored.
ZState z_from_gamma(const GammaState& state);

// "z-ratio": on regular squares, (1 - z_-)/(1 - z) = a'/a for 1 < j < k+1,
// 1/(1 - z) = a'/a at j = 1 and 1 - z_- = a'/a at j = k+1.
Report check_z_ratio_relations(const GammaState& state);

// "xpera": (1 - x'_-/a) / (1 - a'/x) == -x/a on squares with all four
// variables of A_j defined (2 <= j <= k).
Report check_xpera(const GammaState& state);

}  // namespace yperiod
