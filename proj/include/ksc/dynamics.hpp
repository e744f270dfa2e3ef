#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ksc/graph.hpp"
#include "ksc/torus.hpp"

namespace ksc {

// Kuramoto-Sakaguchi model on a weighted graph:
//   dx_i/dt = omega_i - sum_j a_ij [ sin(x_i - x_j - phi) + sin(phi) ].
// Per-edge couplings c_e = a_e cos(phi) and s_e = a_e sin(phi) are cached at
// construction; the object is immutable afterwards.
struct ModelParams {
  ModelParams(WeightedGraph g, double phi_, Eigen::VectorXd omega_);

  WeightedGraph graph;
  double phi;
  Eigen::VectorXd omega;
  Eigen::VectorXd c;  // a_e cos(phi), per edge
  Eigen::VectorXd s;  // a_e sin(phi), per edge
};

struct Trajectory {
  Eigen::VectorXd times;
  std::vector<PhaseState> states;
  double dt = 0.0;
};

// The full vector field f(x).
Eigen::VectorXd vector_field(const ModelParams& p, const PhaseState& x);

// Odd coupling part: -sum_j c_ij sin(x_i - x_j).
Eigen::VectorXd odd_part(const ModelParams& p, const PhaseState& x);

// Even coupling part: -sum_j s_ij [1 - cos(x_i - x_j)].
Eigen::VectorXd even_part(const ModelParams& p, const PhaseState& x);

// Jacobian of the odd part; symmetric, zero row sums.
Eigen::MatrixXd jacobian_odd(const ModelParams& p, const PhaseState& x);

// Jacobian of the even part; antisymmetric off the diagonal, zero row sums.
Eigen::MatrixXd jacobian_even(const ModelParams& p, const PhaseState& x);

// J_f = J_odd + J_even.
Eigen::MatrixXd jacobian(const ModelParams& p, const PhaseState& x);

// Classical fixed-step RK4 from x0 up to the first multiple of dt at or
// beyond t_end. All intermediate states are kept.
Trajectory integrate(const ModelParams& p, const PhaseState& x0, double dt,
                     double t_end);

struct SyncResidual {
  double omega_s;   // mean of f(x)
  double residual;  // ||f(x) - omega_s 1||_2; zero iff x is synchronous
};

SyncResidual sync_residual(const ModelParams& p, const PhaseState& x);

// Default integration step, one thousandth of the coupling time scale.
inline double default_step(const WeightedGraph& g) {
  return 1e-3 / max_weighted_degree(g);
}

}  // namespace ksc
