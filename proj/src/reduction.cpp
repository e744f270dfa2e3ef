#include "ksc/reduction.hpp"

#include <cmath>
#include <numbers>

namespace ksc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

PolytopeMap::PolytopeMap(WeightedGraph g, CycleBasis basis)
    : g_(std::move(g)), basis_(std::move(basis)), proj_(g_.n()) {
  if (basis_.cycle_edge_matrix.cols() != g_.m())
    throw DimensionMismatch("cycle basis does not match the graph");
  Bt_ = incidence_matrix(g_).transpose();
  BtRt_ = Bt_ * proj_.R().transpose();
  smin_BtRt_ = BtRt_.jacobiSvd().singularValues().minCoeff();
  Bt_cod_.compute(Bt_);
}

void PolytopeMap::check_u(const WindingVector& u) const {
  if (u.size() != basis_.count())
    throw DimensionMismatch("winding vector size != cycle count");
}

Eigen::VectorXd PolytopeMap::cycle_offset(const WindingVector& u) const {
  check_u(u);
  if (basis_.count() == 0) return Eigen::VectorXd::Zero(g_.m());
  return kTwoPi * (basis_.cycle_pinv * u.cast<double>());
}

ReducedState PolytopeMap::project(const PhaseState& x) const {
  const WindingVector u = winding_vector(basis_, x);
  const Eigen::VectorXd eta = edge_diffs(g_, x) - cycle_offset(u);
  // Minimum-norm least-squares solution lies in 1-perp automatically.
  const Eigen::VectorXd y = Bt_cod_.solve(eta);
  if ((Bt_ * y - eta).norm() > 1e-9)
    throw InconsistentCell(
        "edge differences are not consistent with any phase state");
  return {proj_.R() * y, u};
}

Eigen::VectorXd PolytopeMap::embed_edge_diffs(const Eigen::VectorXd& z,
                                              const WindingVector& u) const {
  if (z.size() != g_.n() - 1)
    throw DimensionMismatch("reduced state must have length n-1");
  return BtRt_ * z + cycle_offset(u);
}

bool PolytopeMap::in_polytope(const Eigen::VectorXd& z, const WindingVector& u,
                              double gamma) const {
  if (!(gamma > 0.0 && gamma <= kPi))
    throw InvalidRange("polytope level gamma must lie in (0, pi]");
  return embed_edge_diffs(z, u).cwiseAbs().maxCoeff() < gamma;
}

PhaseState PolytopeMap::lift(const Eigen::VectorXd& z,
                             const WindingVector& u) const {
  const Eigen::VectorXd eta = embed_edge_diffs(z, u);
  PhaseState x = PhaseState::Zero(g_.n());
  // Root is vertex 0 of the BFS order; propagate eta along tree edges.
  for (int v : basis_.bfs_order) {
    const int parent = basis_.tree_parent[v];
    if (parent < 0) continue;
    const int e = basis_.tree_edge[v];
    const Edge& ed = g_.edges()[e];
    // eta_e = x_i - x_j in canonical orientation.
    x[v] = (ed.i == v) ? x[parent] + eta[e] : x[parent] - eta[e];
  }
  // Non-tree edges must close up to exact multiples of 2 pi.
  for (int e = 0; e < g_.m(); ++e) {
    const Edge& ed = g_.edges()[e];
    const double gap = x[ed.i] - x[ed.j] - eta[e];
    if (std::abs(std::remainder(gap, kTwoPi)) > 1e-8)
      throw CycleInconsistent("edge differences do not close around a cycle");
  }
  x.array() -= x.mean();
  return x;
}

double PolytopeMap::bounding_radius(const WindingVector& u,
                                    double gamma) const {
  check_u(u);
  double off = 0.0;
  if (basis_.count() > 0)
    off = (basis_.cycle_pinv * u.cast<double>()).cwiseAbs().maxCoeff();
  return std::sqrt(double(g_.m())) * (gamma + kTwoPi * off) / smin_BtRt_;
}

Eigen::VectorXd reduced_field(const ModelParams& p, const PolytopeMap& map,
                              const Eigen::VectorXd& z,
                              const WindingVector& u) {
  if (p.graph.n() != map.graph().n() || p.graph.m() != map.graph().m())
    throw DimensionMismatch("model and polytope map disagree on the graph");
  const Eigen::VectorXd eta = map.embed_edge_diffs(z, u);
  Eigen::VectorXd F = p.omega;
  const double sphi = std::sin(p.phi);
  for (int e = 0; e < p.graph.m(); ++e) {
    const Edge& ed = p.graph.edges()[e];
    F[ed.i] -= ed.w * (std::sin(eta[e] - p.phi) + sphi);
    F[ed.j] -= ed.w * (std::sin(-eta[e] - p.phi) + sphi);
  }
  return map.projector().R() * F;
}

Eigen::MatrixXd reduced_jacobian(const ModelParams& p, const PolytopeMap& map,
                                 const Eigen::VectorXd& z,
                                 const WindingVector& u) {
  const PhaseState x = map.lift(z, u);
  return map.projector().R() * jacobian(p, x) *
         map.projector().R().transpose();
}

}  // namespace ksc
