#include "ksc/torus.hpp"

#include <cmath>
#include <numbers>

namespace ksc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kWindingTol = 1e-9;
}  // namespace

double ccw_diff(double x1, double x2) {
  double d = std::remainder(x1 - x2, kTwoPi);  // (-pi, pi]
  if (d >= kPi) d -= kTwoPi;                   // half-open at +pi
  return d;
}

Eigen::VectorXd edge_diffs(const WeightedGraph& g, const PhaseState& x) {
  if (x.size() != g.n())
    throw DimensionMismatch("edge_diffs: state size != vertex count");
  Eigen::VectorXd d(g.m());
  for (int e = 0; e < g.m(); ++e)
    d[e] = ccw_diff(x[g.edges()[e].i], x[g.edges()[e].j]);
  return d;
}

int winding_number(const std::vector<int>& cycle, const PhaseState& x) {
  double sum = 0.0;
  for (size_t k = 1; k < cycle.size(); ++k)
    sum += ccw_diff(x[cycle[k - 1]], x[cycle[k]]);
  const double q = sum / kTwoPi;
  const double rounded = std::round(q);
  if (std::abs(q - rounded) > kWindingTol)
    throw NonIntegerWinding("cycle sum is not an integer multiple of 2*pi");
  return static_cast<int>(rounded);
}

WindingVector winding_vector(const CycleBasis& basis, const PhaseState& x) {
  WindingVector u(basis.count());
  for (int s = 0; s < basis.count(); ++s)
    u[s] = winding_number(basis.cycles[s], x);
  return u;
}

bool is_cohesive(const WeightedGraph& g, const PhaseState& x, double gamma) {
  if (!(gamma >= 0.0 && gamma <= kPi))
    throw InvalidGamma("gamma must lie in [0, pi]");
  return edge_diffs(g, x).cwiseAbs().maxCoeff() <= gamma;
}

bool in_cell(const WeightedGraph& g, const CycleBasis& basis,
             const PhaseState& x, const WindingVector& u, double gamma) {
  if (u.size() != basis.count())
    throw DimensionMismatch("in_cell: winding vector size != cycle count");
  return (winding_vector(basis, x).array() == u.array()).all() &&
         is_cohesive(g, x, gamma);
}

}  // namespace ksc
