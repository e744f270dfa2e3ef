#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ksc/dynamics.hpp"
#include "ksc/reduction.hpp"

namespace ksc {

struct NewtonOptions {
  int max_iterations = 100;
  double tolerance = 1e-10;  // on ||f~(z)||_2
  int max_halvings = 30;
};

struct SyncResult {
  bool found = false;
  ReducedState z_star;
  PhaseState x_star;      // mean-zero lift
  double omega_s = 0.0;   // synchronous frequency
  double residual = 0.0;  // ||f~(z_star)||_2
  bool in_cell = false;   // membership in P_{u,gamma}
  int iterations = 0;
};

// Damped Newton iteration on the reduced field, started from z0. Iterates
// may leave the polytope; only the converged point's membership is reported.
SyncResult find_sync(const ModelParams& p, const PolytopeMap& map,
                     const WindingVector& u, double gamma,
                     const Eigen::VectorXd& z0,
                     const NewtonOptions& opts = {});

// True iff x - y = rho 1 + 2 pi l for some real rho and integer vector l.
bool same_sync(const PhaseState& x, const PhaseState& y, double tol = 1e-7);

struct UniquenessReport {
  WindingVector u;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  int n_starts = 0;
  int sampled = 0;    // starts actually drawn (cell may be empty)
  int converged = 0;  // Newton reached tolerance
  int diverged = 0;   // solver error or iteration budget exhausted
  int escaped = 0;    // converged, but outside Gamma(u, gamma)
  int classes = 0;    // same_sync classes among in-cell results
  bool alarm = false; // two or more classes: contradicts at-most-uniqueness
  PhaseState representative;  // first in-cell result, when any
  double omega_s = 0.0;
  double max_residual = 0.0;  // max lifted residual over in-cell results
};

// Multistart experiment: n_starts points drawn uniformly from P_{u,gamma} by
// rejection sampling, one Newton run each. Solver errors are recorded as
// diverged, never raised. Deterministic given (seed, n_starts).
UniquenessReport uniqueness_check(const ModelParams& p, const PolytopeMap& map,
                                  const WindingVector& u, double gamma,
                                  int n_starts, std::uint64_t seed,
                                  int jobs = 0);

// Necessary winding bound from cohesiveness: |u_sigma| <= floor(l_sigma *
// gamma / 2 pi). Cells in the returned product may still be empty.
std::vector<WindingVector> enumerate_feasible_windings(const WeightedGraph& g,
                                                       const CycleBasis& basis,
                                                       double gamma);

// One uniform draw from P_{u,gamma} (rejection from a bounding box), or
// false when max_attempts is exhausted.
bool sample_in_polytope(const PolytopeMap& map, const WindingVector& u,
                        double gamma, std::mt19937_64& rng,
                        Eigen::VectorXd& z_out, int max_attempts = 100000);

}  // namespace ksc
