#include "ksc/certificate.hpp"

#include <cmath>
#include <numbers>

#include "ksc/parallel.hpp"

namespace ksc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void check_angles(double phi, double gamma) {
  if (!(phi >= 0.0 && phi <= kHalfPi))
    throw InvalidRange("phi must lie in [0, pi/2]");
  if (!(gamma >= 0.0 && gamma <= kHalfPi))
    throw InvalidRange("gamma must lie in [0, pi/2]");
}

}  // namespace

double odd_bound(const WeightedGraph& g, double phi, double gamma) {
  check_angles(phi, gamma);
  return -std::cos(phi) * std::cos(gamma) * algebraic_connectivity(g);
}

double even_bound(const WeightedGraph& g, double phi, double gamma) {
  check_angles(phi, gamma);
  return std::sin(phi) * std::sin(gamma) * max_weighted_degree(g);
}

double gamma_bar_from_ratio(double ratio, double phi) {
  if (!(ratio > 0.0)) throw InvalidRange("ratio must be positive");
  if (!(phi >= 0.0 && phi <= kHalfPi))
    throw InvalidRange("phi must lie in [0, pi/2]");
  if (phi == 0.0) return kHalfPi;  // arctan(+inf)
  return std::atan(ratio / std::tan(phi));
}

double gamma_bar(const WeightedGraph& g, double phi) {
  return gamma_bar_from_ratio(
      algebraic_connectivity(g) / max_weighted_degree(g), phi);
}

double contraction_rate(const WeightedGraph& g, double phi, double gamma) {
  check_angles(phi, gamma);
  if (gamma >= gamma_bar(g, phi))
    throw InvalidRange("gamma >= gamma_bar: rate nonpositive, no certificate");
  return -odd_bound(g, phi, gamma) - even_bound(g, phi, gamma);
}

CertificateReport certify(const WeightedGraph& g, double phi, double gamma) {
  check_angles(phi, gamma);
  CertificateReport r;
  r.lambda2 = algebraic_connectivity(g);
  r.d_max = max_weighted_degree(g);
  r.phi = phi;
  r.gamma = gamma;
  r.gamma_bar = gamma_bar(g, phi);
  r.limit_case = (phi == 0.0);
  r.odd_bound = odd_bound(g, phi, gamma);
  r.even_bound = even_bound(g, phi, gamma);
  r.rate_c = -r.odd_bound - r.even_bound;
  r.verdict = gamma < r.gamma_bar ? Verdict::Semicontracting
                                  : Verdict::NotCertified;
  return r;
}

PointwiseCheck verify_pointwise(const ModelParams& p, const PhaseState& x,
                                double gamma) {
  if (!is_cohesive(p.graph, x, gamma))
    throw NotCohesive("state is not gamma-cohesive");
  const ConsensusProjector proj(p.graph.n());
  PointwiseCheck c;
  c.mu_odd = log_seminorm(proj, jacobian_odd(p, x));
  c.mu_even = log_seminorm(proj, jacobian_even(p, x));
  c.mu_total = log_seminorm(proj, jacobian(p, x));
  c.odd_bound = odd_bound(p.graph, p.phi, gamma);
  c.even_bound = even_bound(p.graph, p.phi, gamma);
  const double tol = 1e-9;
  c.all_bounds_hold = c.mu_odd <= c.odd_bound + tol &&
                      c.mu_even <= c.even_bound + tol &&
                      c.mu_total <= c.odd_bound + c.even_bound + tol;
  return c;
}

std::vector<BoundsRow> bounds_curve(const std::vector<double>& ratios,
                                    const std::vector<double>& phi_grid) {
  std::vector<BoundsRow> rows;
  rows.reserve(ratios.size() * phi_grid.size());
  for (double r : ratios) {
    for (double phi : phi_grid) {
      if (!(phi > 0.0 && phi <= kHalfPi))
        throw InvalidRange("bounds_curve needs phi in (0, pi/2]");
      rows.push_back({r, phi, gamma_bar_from_ratio(r, phi)});
    }
  }
  return rows;
}

ScanGrid scan_slice(const ModelParams& p, const CycleBasis& basis,
                    const PhaseState& origin, const Eigen::VectorXd& dir1,
                    const Eigen::VectorXd& dir2, double range_lo,
                    double range_hi, int res, int jobs) {
  const int n = p.graph.n();
  if (origin.size() != n || dir1.size() != n || dir2.size() != n)
    throw DimensionMismatch("scan_slice: vectors must have length n");
  if (res < 2) throw InvalidRange("scan resolution must be >= 2");
  if (!(range_hi > range_lo)) throw InvalidRange("empty scan range");
  // Gram determinant test for linear independence of the slice directions.
  const double g11 = dir1.squaredNorm(), g22 = dir2.squaredNorm(),
               g12 = dir1.dot(dir2);
  if (g11 * g22 - g12 * g12 <= 1e-12 * g11 * g22)
    throw InvalidRange("slice directions are linearly dependent");

  ScanGrid grid;
  grid.origin = origin;
  grid.dir1 = dir1;
  grid.dir2 = dir2;
  grid.range_lo = range_lo;
  grid.range_hi = range_hi;
  grid.res = res;
  grid.gamma_flag = gamma_bar(p.graph, p.phi);
  grid.mu.resize(res, res);
  grid.windings.resize(static_cast<size_t>(res) * res);
  grid.cohesive.resize(static_cast<size_t>(res) * res);

  const ConsensusProjector proj(n);
  parallel_for(res * res, jobs, [&](int cell) {
    const int is = cell / res;
    const int it = cell % res;
    const PhaseState x =
        origin + grid.s_at(is) * dir1 + grid.t_at(it) * dir2;
    grid.mu(is, it) = log_seminorm(proj, jacobian(p, x));
    grid.windings[cell] = winding_vector(basis, x);
    grid.cohesive[cell] = is_cohesive(p.graph, x, grid.gamma_flag) ? 1 : 0;
  });
  return grid;
}

}  // namespace ksc
