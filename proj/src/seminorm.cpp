#include "ksc/seminorm.hpp"

#include <cmath>

namespace ksc {

ConsensusProjector::ConsensusProjector(int n) : n_(n) {
  if (n < 2) throw InvalidDimension("projector needs n >= 2");
  // Helmert rows: row k has k ones followed by -k, scaled to unit norm.
  R_ = Eigen::MatrixXd::Zero(n - 1, n);
  for (int k = 1; k < n; ++k) {
    const double scale = 1.0 / std::sqrt(double(k) * (k + 1));
    for (int j = 0; j < k; ++j) R_(k - 1, j) = scale;
    R_(k - 1, k) = -double(k) * scale;
  }
  Pi_ = R_.transpose() * R_;
}

ConsensusProjector ConsensusProjector::from_matrix(const Eigen::MatrixXd& R) {
  const int n = static_cast<int>(R.cols());
  if (n < 2 || R.rows() != n - 1)
    throw InvalidDimension("R must be (n-1) x n with n >= 2");
  const double ortho =
      (R * R.transpose() - Eigen::MatrixXd::Identity(n - 1, n - 1)).norm();
  const double kernel = (R * Eigen::VectorXd::Ones(n)).norm();
  if (ortho > 1e-10 || kernel > 1e-10)
    throw InvalidDimension("rows must be an orthonormal basis of 1-perp");
  ConsensusProjector p;
  p.n_ = n;
  p.R_ = R;
  p.Pi_ = R.transpose() * R;
  return p;
}

Eigen::MatrixXd ConsensusProjector::compress(const Eigen::MatrixXd& M) const {
  if (M.rows() != n_ || M.cols() != n_)
    throw DimensionMismatch("compress: matrix is not n x n");
  return R_ * M * R_.transpose();
}

ConsensusProjector build_projector(int n) { return ConsensusProjector(n); }

double consensus_seminorm(const ConsensusProjector& proj,
                          const Eigen::VectorXd& x) {
  if (x.size() != proj.n())
    throw DimensionMismatch("consensus_seminorm: vector size != n");
  return (proj.R() * x).norm();
}

double log_seminorm(const ConsensusProjector& proj, const Eigen::MatrixXd& A) {
  const Eigen::MatrixXd S = proj.compress(0.5 * (A + A.transpose()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  return es.eigenvalues().maxCoeff();
}

bool log_seminorm_lmi_check(const ConsensusProjector& proj,
                            const Eigen::MatrixXd& A, double b) {
  // R (2b Pi - Pi A - A^T Pi) R^T = 2 (b I - R sym(A) R^T), since R Pi = R.
  const Eigen::MatrixXd M =
      2.0 * (b * Eigen::MatrixXd::Identity(proj.n() - 1, proj.n() - 1) -
             proj.compress(0.5 * (A + A.transpose())));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  return es.eigenvalues().minCoeff() >= -1e-9;
}

double log_seminorm_limit_estimate(const ConsensusProjector& proj,
                                   const Eigen::MatrixXd& A, double h) {
  if (!(h > 0.0)) throw InvalidRange("limit estimate needs h > 0");
  if (A.rows() != proj.n() || A.cols() != proj.n())
    throw DimensionMismatch("limit estimate: matrix is not n x n");
  const double drift = (proj.Pi() * A * Eigen::VectorXd::Ones(proj.n())).norm();
  if (drift > 1e-9)
    throw KernelNotInvariant("A does not keep span(1) invariant");
  const Eigen::MatrixXd M =
      Eigen::MatrixXd::Identity(proj.n() - 1, proj.n() - 1) +
      h * proj.compress(A);
  const double norm2 = M.jacobiSvd().singularValues().maxCoeff();
  return (norm2 - 1.0) / h;
}

}  // namespace ksc
