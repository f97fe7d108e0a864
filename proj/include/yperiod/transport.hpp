#pragma once

// Parallel transport in the regular band of the Gamma graph, the staircase
// products, delta(p) = PT(p, sigma_hat p) and the checks built on them.
//
// Paths move one column east per step. From a vertex (n, i):
//   Up   follows the a-edge at (n, i-1) to (n+1, i-1)
//   Down follows the x-edge at (n+1, i) to (n+1, i+1)
// Products are taken in traversal order, first edge leftmost.

#include <cstdint>
#include <optional>
#include <vector>

#include "yperiod/gamma.hpp"
#include "yperiod/matrix.hpp"
#include "yperiod/report.hpp"

namespace yperiod {

enum class Step { Up, Down };

struct Path {
  PlanePoint start;
  std::vector<Step> steps;

  PlanePoint end() const;
  std::vector<EdgeRef> edges() const;
  friend bool operator==(const Path&, const Path&) = default;
};

EdgeRef edge_for(PlanePoint from, Step step);

// Vertices k <= i <= r+2 with n + i odd.
bool is_regular_vertex(SystemShape shape, PlanePoint p);

// X-form for x-edges, A-form for a-edges.
SquareMatrix edge_matrix(const GammaState& state, const EdgeRef& edge);

// NotRegular if the path leaves the regular band or starts on a non-vertex;
// InsufficientWindow if an edge is not stored.
SquareMatrix parallel_transport(const GammaState& state, const Path& path);
// As above, and std::invalid_argument unless the path runs from -> to.
SquareMatrix parallel_transport(const GammaState& state, PlanePoint from, PlanePoint to,
                                const Path& path);

// p -> sigma_hat p: up to row k, k (Down, Up) pairs, then down.
Path northern_path(SystemShape shape, PlanePoint p);
// p -> sigma_hat p: down to row r+2, k (Up, Down) pairs, then up.
Path southern_path(SystemShape shape, PlanePoint p);

// A uniformly random interleaving of the steps from -> to that stays in the
// regular band. std::invalid_argument if no such path exists.
Path random_regular_path(SystemShape shape, PlanePoint from, PlanePoint to, Rng& rng);

// ---------------------------------------------------------------------------

enum class StaircaseSide { North, South };

// North: X(n0,k) A(n0,k) ... X(n0+2(k-1),k) A(n0+2(k-1),k), needs n0 + k even.
// South: A(n0,r+1) X(n0+2,r+1) ... A(n0+2(k-1),r+1) X(n0+2k,r+1), needs
// n0 + r + 1 even. std::invalid_argument on wrong parity.
SquareMatrix staircase_product(const GammaState& state, int n0,
                               StaircaseSide side = StaircaseSide::North);

// Every n0 whose staircase is fully stored.
std::vector<int> staircase_origins(const GammaState& state, StaircaseSide side);

// "staircase-north" (anti-lower-triangular) and "staircase-south"
// (anti-upper-triangular) for every stored staircase.
Report check_staircases(const GammaState& state);

// ---------------------------------------------------------------------------

struct SigmaFactorizationK2 {
  SquareMatrix lhs;        // XA
  SquareMatrix left;       // [[a'_1,0,0],[1,x_2,0],[0,0,1]]
  SquareMatrix sigma_hat;  // [[1,0,0],[0,0,a_3],[0,1,a_3]]
  SquareMatrix right;      // X' (+) 1
  SquareMatrix product() const { return left * sigma_hat * right; }
};

SigmaFactorizationK2 sigma_factorization_k2(const Rational& x1, const Rational& x2,
                                            const Rational& a1, const Rational& a2,
                                            const Rational& a3, const Rational& a1_prime,
                                            const Rational& x1_prime);
// The square centred at (n, 2). NotApplicable unless k == 2.
SigmaFactorizationK2 sigma_factorization_k2(const GammaState& state, int n);
// "factorization-k2" on every stored square of row 2. NotApplicable unless k == 2.
Report sigma_factorization_check_k2(const GammaState& state);

// ---------------------------------------------------------------------------

// Transport along northern_path. NotRegular unless p and sigma_hat p are
// regular vertices; InsufficientWindow if the window is too narrow.
SquareMatrix delta(const GammaState& state, PlanePoint p);

// Regular vertices whose northern and southern paths are fully stored.
std::vector<PlanePoint> delta_points(const GammaState& state);

struct NorthernFactorization {
  SquareMatrix leading;    // the initial Up steps
  SquareMatrix staircase;  // the k (Down, Up) pairs
  SquareMatrix trailing;   // the final Down steps
  int staircase_origin = 0;
};

NorthernFactorization northern_factorization(const GammaState& state, PlanePoint p);

// "delta": anti-diagonal; "delta-paths": northern and southern transports
// agree; "delta-factorization": leading * staircase * trailing == delta with
// an anti-lower-triangular staircase.
Report check_deltas(const GammaState& state);

// "path-independence": for `samples` random vertex pairs, two random regular
// paths give equal transports.
Report check_path_independence(const GammaState& state, Rng& rng, int samples);

// ---------------------------------------------------------------------------

// Corners, edges and image edges of a regular square (centre rows k+1..r+1).
struct SquareFrame {
  PlanePoint centre;
  PlanePoint w, n, e, s;
  SquareMatrix X, A, A_prime, X_prime;  // this square
  SquareMatrix Y, B, B_prime, Y_prime;  // square centred at sigma_hat(centre)
  SquareMatrix delta_w, delta_n, delta_e, delta_s;
};

// NotRegular for a centre outside rows k+1..r+1; InsufficientWindow if any
// edge or corner transport is not stored.
SquareFrame square_frame(const GammaState& state, PlanePoint centre);

// Squares for which square_frame succeeds.
std::vector<PlanePoint> eligible_squares(const GammaState& state);

// "transport": the four commutation identities
//   A' d(N) = d(W) Y,  A d(E) = d(S) Y',  X d(S) = d(W) B',  X' d(E) = d(N) B.
Report check_transport_commutation(const GammaState& state, PlanePoint centre);

// "diagonal": the four diagonal / anti-diagonal part identities;
// "w-conjugation": D(A) D(A')^-1 == w D(B') D(B)^-1 w;
// "ratio": a_j / a'_j == b'_{k+2-j} / b_{k+2-j} for j = 1..k+1.
Report check_diagonal_identity(const GammaState& state, PlanePoint centre);

// "z-induced": z_j at the square equals z_{k+1-j} at the image square when
// both are rebuilt from the a-ratios alone; "z-induced-agreement": that verdict
// matches z_sigma_hat_check on z_from_gamma(state) for the same pair.
Report check_induced_z_invariance(const GammaState& state);

// Runs the two square checks on every eligible square.
Report check_sigma_chain(const GammaState& state);

}  // namespace yperiod
