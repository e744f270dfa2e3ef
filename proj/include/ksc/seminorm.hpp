#pragma once

#include <Eigen/Dense>

#include "ksc/errors.hpp"

namespace ksc {

// Orthonormal parametrization of the complement of the consensus direction:
// R is (n-1) x n with R 1 = 0 and R R^T = I, Pi = R^T R = I - (1/n) 1 1^T.
// The default construction uses Helmert rows; from_matrix accepts any matrix
// with the same two properties (the seminorms below do not depend on the
// choice).
class ConsensusProjector {
 public:
  explicit ConsensusProjector(int n);

  static ConsensusProjector from_matrix(const Eigen::MatrixXd& R);

  int n() const { return n_; }
  const Eigen::MatrixXd& R() const { return R_; }
  const Eigen::MatrixXd& Pi() const { return Pi_; }

  // R M R^T for an n x n matrix M.
  Eigen::MatrixXd compress(const Eigen::MatrixXd& M) const;

 private:
  ConsensusProjector() = default;

  int n_ = 0;
  Eigen::MatrixXd R_;
  Eigen::MatrixXd Pi_;
};

ConsensusProjector build_projector(int n);

// ||R x||_2, the (l2, Pi_n) consensus seminorm.
double consensus_seminorm(const ConsensusProjector& proj,
                          const Eigen::VectorXd& x);

// Logarithmic seminorm mu_{2,Pi_n}(A) = lambda_max(R (A + A^T)/2 R^T).
double log_seminorm(const ConsensusProjector& proj, const Eigen::MatrixXd& A);

// True iff 2b Pi - Pi A - A^T Pi is positive semidefinite on the complement
// of span(1), tested on the R-compression. log_seminorm(A) is the minimal b
// passing this check.
bool log_seminorm_lmi_check(const ConsensusProjector& proj,
                            const Eigen::MatrixXd& A, double b);

// One-sided difference quotient (||R (I + h A) R^T||_2 - 1) / h. Requires
// A 1 in span(1) so that the quotient converges to log_seminorm(A), with
// O(h) error.
double log_seminorm_limit_estimate(const ConsensusProjector& proj,
                                   const Eigen::MatrixXd& A, double h);

}  // namespace ksc
