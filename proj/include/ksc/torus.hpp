#pragma once

#include <Eigen/Dense>

#include "ksc/graph.hpp"

namespace ksc {

// Phases live in R^n, no normalization imposed; the toroidal topology enters
// only through the counterclockwise difference below.
using PhaseState = Eigen::VectorXd;
using WindingVector = Eigen::VectorXi;

// Representative of x1 - x2 in the half-open interval [-pi, pi).
double ccw_diff(double x1, double x2);

// Per-edge counterclockwise differences: component e is ccw_diff(x_i, x_j)
// for edge e = (i, j) in canonical orientation.
Eigen::VectorXd edge_diffs(const WeightedGraph& g, const PhaseState& x);

// (1/2pi) * sum of ccw differences along the cycle. The sum is asserted to
// be within 1e-9 of an integer multiple of 2pi.
int winding_number(const std::vector<int>& cycle, const PhaseState& x);

// Stacks winding_number over all basis cycles.
WindingVector winding_vector(const CycleBasis& basis, const PhaseState& x);

// True iff every edge difference has magnitude at most gamma.
bool is_cohesive(const WeightedGraph& g, const PhaseState& x, double gamma);

// Membership in the gamma-cohesive u-winding cell.
bool in_cell(const WeightedGraph& g, const CycleBasis& basis,
             const PhaseState& x, const WindingVector& u, double gamma);

}  // namespace ksc
