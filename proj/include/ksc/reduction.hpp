#pragma once

#include <Eigen/Dense>

#include "ksc/dynamics.hpp"
#include "ksc/graph.hpp"
#include "ksc/seminorm.hpp"
#include "ksc/torus.hpp"

namespace ksc {

// Coordinates z in R^{n-1} of a state within its winding cell, together with
// the cell tag.
struct ReducedState {
  Eigen::VectorXd z;
  WindingVector u;
};

// Polytopic chart of the winding cells: edge differences split as
//   d_cc(B^T x) = B^T y + 2 pi C^+ u,   z = R y,
// so each cell u maps onto the polytope P_u = { z : ||B^T R^T z +
// 2 pi C^+ u||_inf <= pi }. Holds the graph, basis, projector and the cached
// least-squares factorization of B^T; immutable after construction.
class PolytopeMap {
 public:
  PolytopeMap(WeightedGraph g, CycleBasis basis);

  const WeightedGraph& graph() const { return g_; }
  const CycleBasis& basis() const { return basis_; }
  const ConsensusProjector& projector() const { return proj_; }

  // z = R y with B^T y = edge_diffs(x) - 2 pi C^+ u, u the winding vector of
  // x. The least-squares residual is asserted to vanish.
  ReducedState project(const PhaseState& x) const;

  // eta = B^T R^T z + 2 pi C^+ u.
  Eigen::VectorXd embed_edge_diffs(const Eigen::VectorXd& z,
                                   const WindingVector& u) const;

  // Strict membership test ||eta||_inf < gamma (P_{u,gamma} is open; the
  // cohesive set Delta(gamma) uses <= instead).
  bool in_polytope(const Eigen::VectorXd& z, const WindingVector& u,
                   double gamma) const;

  // Mean-zero phase state with project(lift(z, u)) = (z, u): the BFS-tree
  // root is pinned at 0 and eta is propagated along tree edges; non-tree
  // edges are verified mod 2 pi.
  PhaseState lift(const Eigen::VectorXd& z, const WindingVector& u) const;

  // 2 pi C^+ u (zero vector for trees).
  Eigen::VectorXd cycle_offset(const WindingVector& u) const;

  // A bounding radius of P_{u,gamma} in z-space, used for rejection
  // sampling: ||z||_2 <= sqrt(m) (gamma + 2 pi ||C^+ u||_inf) / s_min(B^T R^T).
  double bounding_radius(const WindingVector& u, double gamma) const;

 private:
  void check_u(const WindingVector& u) const;

  WeightedGraph g_;
  CycleBasis basis_;
  ConsensusProjector proj_;
  Eigen::MatrixXd Bt_;     // m x n
  Eigen::MatrixXd BtRt_;   // m x (n-1)
  double smin_BtRt_;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> Bt_cod_;
};

// R F(eta) with eta = embed_edge_diffs(z, u); F is the edge-difference form
// of the vector field, so reduced_field(project(x)) = R f(x) on the cell.
Eigen::VectorXd reduced_field(const ModelParams& p, const PolytopeMap& map,
                              const Eigen::VectorXd& z, const WindingVector& u);

// R J_f(x) R^T evaluated at the tree lift x of (z, u); independent of the
// preimage choice.
Eigen::MatrixXd reduced_jacobian(const ModelParams& p, const PolytopeMap& map,
                                 const Eigen::VectorXd& z,
                                 const WindingVector& u);

}  // namespace ksc
