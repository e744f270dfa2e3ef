#include "ksc/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace ksc {

ModelParams::ModelParams(WeightedGraph g, double phi_, Eigen::VectorXd omega_)
    : graph(std::move(g)), phi(phi_), omega(std::move(omega_)) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi / 2))
    throw InvalidRange("frustration phi must lie in [0, pi/2]");
  if (omega.size() != graph.n())
    throw DimensionMismatch("omega size != vertex count");
  const int m = graph.m();
  c.resize(m);
  s.resize(m);
  for (int e = 0; e < m; ++e) {
    c[e] = graph.edges()[e].w * std::cos(phi);
    s[e] = graph.edges()[e].w * std::sin(phi);
  }
}

namespace {

void check_state(const ModelParams& p, const PhaseState& x, const char* op) {
  if (x.size() != p.graph.n())
    throw DimensionMismatch(std::string(op) + ": state size != vertex count");
}

}  // namespace

Eigen::VectorXd vector_field(const ModelParams& p, const PhaseState& x) {
  check_state(p, x, "vector_field");
  Eigen::VectorXd f = p.omega;
  const double sphi = std::sin(p.phi);
  for (int e = 0; e < p.graph.m(); ++e) {
    const Edge& ed = p.graph.edges()[e];
    const double d = x[ed.i] - x[ed.j];
    f[ed.i] -= ed.w * (std::sin(d - p.phi) + sphi);
    f[ed.j] -= ed.w * (std::sin(-d - p.phi) + sphi);
  }
  return f;
}

Eigen::VectorXd odd_part(const ModelParams& p, const PhaseState& x) {
  check_state(p, x, "odd_part");
  Eigen::VectorXd f = Eigen::VectorXd::Zero(x.size());
  for (int e = 0; e < p.graph.m(); ++e) {
    const Edge& ed = p.graph.edges()[e];
    const double sd = std::sin(x[ed.i] - x[ed.j]);
    f[ed.i] -= p.c[e] * sd;
    f[ed.j] += p.c[e] * sd;
  }
  return f;
}

Eigen::VectorXd even_part(const ModelParams& p, const PhaseState& x) {
  check_state(p, x, "even_part");
  Eigen::VectorXd f = Eigen::VectorXd::Zero(x.size());
  for (int e = 0; e < p.graph.m(); ++e) {
    const Edge& ed = p.graph.edges()[e];
    const double omc = 1.0 - std::cos(x[ed.i] - x[ed.j]);
    f[ed.i] -= p.s[e] * omc;
    f[ed.j] -= p.s[e] * omc;
  }
  return f;
}

Eigen::MatrixXd jacobian_odd(const ModelParams& p, const PhaseState& x) {
  check_state(p, x, "jacobian_odd");
  const int n = p.graph.n();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int e = 0; e < p.graph.m(); ++e) {
    const Edge& ed = p.graph.edges()[e];
    const double cd = p.c[e] * std::cos(x[ed.i] - x[ed.j]);
    J(ed.i, ed.j) += cd;
    J(ed.j, ed.i) += cd;
    J(ed.i, ed.i) -= cd;
    J(ed.j, ed.j) -= cd;
  }
  return J;
}

Eigen::MatrixXd jacobian_even(const ModelParams& p, const PhaseState& x) {
  check_state(p, x, "jacobian_even");
  const int n = p.graph.n();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int e = 0; e < p.graph.m(); ++e) {
    const Edge& ed = p.graph.edges()[e];
    const double sd = p.s[e] * std::sin(x[ed.i] - x[ed.j]);
    J(ed.i, ed.j) += sd;
    J(ed.j, ed.i) -= sd;  // sin is odd: +s_ij sin(x_j - x_i) = -sd
    J(ed.i, ed.i) -= sd;
    J(ed.j, ed.j) += sd;
  }
  return J;
}

Eigen::MatrixXd jacobian(const ModelParams& p, const PhaseState& x) {
  return jacobian_odd(p, x) + jacobian_even(p, x);
}

Trajectory integrate(const ModelParams& p, const PhaseState& x0, double dt,
                     double t_end) {
  if (!(dt > 0.0) || !(t_end > 0.0))
    throw InvalidRange("integrate needs dt > 0 and t_end > 0");
  check_state(p, x0, "integrate");

  const int steps = static_cast<int>(std::ceil(t_end / dt - 1e-12));
  Trajectory traj;
  traj.dt = dt;
  traj.times.resize(steps + 1);
  traj.states.reserve(steps + 1);

  PhaseState x = x0;
  if (!x.allFinite()) throw NonFiniteState("non-finite initial state");
  traj.times[0] = 0.0;
  traj.states.push_back(x);
  for (int k = 1; k <= steps; ++k) {
    const Eigen::VectorXd k1 = vector_field(p, x);
    const Eigen::VectorXd k2 = vector_field(p, x + 0.5 * dt * k1);
    const Eigen::VectorXd k3 = vector_field(p, x + 0.5 * dt * k2);
    const Eigen::VectorXd k4 = vector_field(p, x + dt * k3);
    x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!x.allFinite())
      throw NonFiniteState("state left the finite range during integration");
    traj.times[k] = k * dt;
    traj.states.push_back(x);
  }
  return traj;
}

SyncResidual sync_residual(const ModelParams& p, const PhaseState& x) {
  const Eigen::VectorXd f = vector_field(p, x);
  const double omega_s = f.mean();
  return {omega_s, (f.array() - omega_s).matrix().norm()};
}

}  // namespace ksc
