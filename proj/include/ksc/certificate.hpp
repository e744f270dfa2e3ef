#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ksc/dynamics.hpp"
#include "ksc/graph.hpp"
#include "ksc/seminorm.hpp"
#include "ksc/torus.hpp"

namespace ksc {

enum class Verdict { Semicontracting, NotCertified };

// Closed-form semicontraction certificate at a cohesiveness level gamma.
// rate_c = cos(phi)cos(gamma)lambda2 - sin(phi)sin(gamma)d_max, positive
// exactly on [0, gamma_bar); odd_bound + even_bound = -rate_c.
struct CertificateReport {
  double gamma_bar;
  double gamma;
  double odd_bound;   // <= 0
  double even_bound;  // >= 0
  double rate_c;
  double lambda2;
  double d_max;
  double phi;
  Verdict verdict;
  bool limit_case;  // phi == 0: gamma_bar is the arctan limit pi/2
};

// -cos(phi) cos(gamma) lambda2. Valid for phi, gamma in [0, pi/2].
double odd_bound(const WeightedGraph& g, double phi, double gamma);

// sin(phi) sin(gamma) d_max.
double even_bound(const WeightedGraph& g, double phi, double gamma);

// arctan of ratio / tan(phi); pi/2 at phi = 0 (limit).
double gamma_bar_from_ratio(double ratio, double phi);

// Cohesiveness threshold arctan(lambda2 / (d_max tan(phi))).
double gamma_bar(const WeightedGraph& g, double phi);

// Certified rate cos(phi)cos(gamma)lambda2 - sin(phi)sin(gamma)d_max.
// Throws InvalidRange when gamma >= gamma_bar (no certificate).
double contraction_rate(const WeightedGraph& g, double phi, double gamma);

// Full report; gamma defaulting is handled by the caller (CLI uses
// 0.9 * gamma_bar). Never throws on gamma >= gamma_bar: the verdict says
// NotCertified and rate_c is reported signed.
CertificateReport certify(const WeightedGraph& g, double phi, double gamma);

struct PointwiseCheck {
  double mu_odd;
  double mu_even;
  double mu_total;
  double odd_bound;
  double even_bound;
  bool all_bounds_hold;
};

// Compares the log-seminorms of the odd/even/full Jacobians at x against
// their closed-form bounds. Requires x gamma-cohesive.
PointwiseCheck verify_pointwise(const ModelParams& p, const PhaseState& x,
                                double gamma);

struct BoundsRow {
  double ratio;
  double phi;
  double gamma_bar;
};

// gamma_bar as a function of phi for each lambda2/d_max ratio.
std::vector<BoundsRow> bounds_curve(const std::vector<double>& ratios,
                                    const std::vector<double>& phi_grid);

// Two-dimensional slice scan: mu_{2,Pi_n}(J_f), winding vector, and
// gamma_bar-cohesiveness flag on a regular grid over
// origin + s*dir1 + t*dir2, s and t in [range_lo, range_hi].
struct ScanGrid {
  Eigen::VectorXd origin;
  Eigen::VectorXd dir1, dir2;
  double range_lo = 0.0, range_hi = 0.0;
  int res = 0;           // grid points per axis, endpoints included
  double gamma_flag;     // cohesiveness level used for the flag column
  Eigen::MatrixXd mu;    // res x res, [is][it]
  std::vector<WindingVector> windings;  // row-major, is * res + it
  std::vector<uint8_t> cohesive;        // same layout

  double s_at(int is) const {
    return range_lo + (range_hi - range_lo) * is / (res - 1);
  }
  double t_at(int it) const { return s_at(it); }
  int flat(int is, int it) const { return is * res + it; }
};

ScanGrid scan_slice(const ModelParams& p, const CycleBasis& basis,
                    const PhaseState& origin, const Eigen::VectorXd& dir1,
                    const Eigen::VectorXd& dir2, double range_lo,
                    double range_hi, int res, int jobs = 0);

}  // namespace ksc
