#include "ksc/sync.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "ksc/certificate.hpp"
#include "ksc/parallel.hpp"

namespace ksc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

SyncResult find_sync(const ModelParams& p, const PolytopeMap& map,
                     const WindingVector& u, double gamma,
                     const Eigen::VectorXd& z0, const NewtonOptions& opts) {
  if (!(gamma > 0.0 && gamma < gamma_bar(p.graph, p.phi)))
    throw InvalidRange("find_sync needs gamma in (0, gamma_bar)");

  Eigen::VectorXd z = z0;
  Eigen::VectorXd fz = reduced_field(p, map, z, u);
  double res = fz.norm();
  for (int it = 0; it < opts.max_iterations; ++it) {
    if (res <= opts.tolerance) {
      SyncResult r;
      r.found = true;
      r.z_star = {z, u};
      r.x_star = map.lift(z, u);
      r.omega_s = sync_residual(p, r.x_star).omega_s;
      r.residual = res;
      r.in_cell = map.in_polytope(z, u, gamma);
      r.iterations = it;
      return r;
    }
    const Eigen::MatrixXd J = reduced_jacobian(p, map, z, u);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
    if (!lu.isInvertible())
      throw SingularJacobian("Newton matrix is rank-deficient");
    const Eigen::VectorXd step = lu.solve(-fz);

    // Armijo-style halving until the residual decreases.
    double alpha = 1.0;
    bool accepted = false;
    for (int h = 0; h <= opts.max_halvings; ++h) {
      const Eigen::VectorXd zn = z + alpha * step;
      const Eigen::VectorXd fn = reduced_field(p, map, zn, u);
      if (fn.norm() < res) {
        z = zn;
        fz = fn;
        res = fn.norm();
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted)
      throw MaxIterations("Newton line search stalled");
  }
  throw MaxIterations("Newton did not converge within the iteration budget");
}

bool same_sync(const PhaseState& x, const PhaseState& y, double tol) {
  if (x.size() != y.size())
    throw DimensionMismatch("same_sync: states differ in length");
  const Eigen::VectorXd d = x - y;
  const double rho = d[0];
  for (int i = 1; i < d.size(); ++i)
    if (std::abs(std::remainder(d[i] - rho, kTwoPi)) > tol) return false;
  return true;
}

bool sample_in_polytope(const PolytopeMap& map, const WindingVector& u,
                        double gamma, std::mt19937_64& rng,
                        Eigen::VectorXd& z_out, int max_attempts) {
  const int dim = map.graph().n() - 1;
  const double radius = map.bounding_radius(u, gamma);
  std::uniform_real_distribution<double> box(-radius, radius);
  Eigen::VectorXd z(dim);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (int i = 0; i < dim; ++i) z[i] = box(rng);
    if (map.in_polytope(z, u, gamma)) {
      z_out = z;
      return true;
    }
  }
  return false;
}

UniquenessReport uniqueness_check(const ModelParams& p, const PolytopeMap& map,
                                  const WindingVector& u, double gamma,
                                  int n_starts, std::uint64_t seed, int jobs) {
  if (!(gamma > 0.0 && gamma < gamma_bar(p.graph, p.phi)))
    throw InvalidRange("uniqueness_check needs gamma in (0, gamma_bar)");
  if (n_starts < 0) throw InvalidRange("n_starts must be nonnegative");

  UniquenessReport rep;
  rep.u = u;
  rep.gamma = gamma;
  rep.seed = seed;
  rep.n_starts = n_starts;
  if (n_starts == 0) return rep;

  // The start list is fixed up front so the report is independent of the
  // worker count.
  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXd> starts;
  starts.reserve(n_starts);
  Eigen::VectorXd z;
  for (int k = 0; k < n_starts; ++k) {
    if (!sample_in_polytope(map, u, gamma, rng, z)) break;
    starts.push_back(z);
  }
  rep.sampled = static_cast<int>(starts.size());

  std::vector<SyncResult> results(starts.size());
  std::vector<uint8_t> failed(starts.size(), 0);
  parallel_for(static_cast<int>(starts.size()), jobs, [&](int i) {
    try {
      results[i] = find_sync(p, map, u, gamma, starts[i]);
    } catch (const Error&) {
      failed[i] = 1;
    }
  });

  std::vector<PhaseState> reps;  // one per same_sync class
  for (size_t i = 0; i < results.size(); ++i) {
    if (failed[i] || !results[i].found) {
      ++rep.diverged;
      continue;
    }
    ++rep.converged;
    const PhaseState& xs = results[i].x_star;
    if (!in_cell(p.graph, map.basis(), xs, u, gamma)) {
      ++rep.escaped;
      continue;
    }
    rep.max_residual =
        std::max(rep.max_residual, sync_residual(p, xs).residual);
    bool known = false;
    for (const PhaseState& r : reps)
      if (same_sync(r, xs)) {
        known = true;
        break;
      }
    if (!known) reps.push_back(xs);
    if (reps.size() == 1 && rep.representative.size() == 0) {
      rep.representative = xs;
      rep.omega_s = results[i].omega_s;
    }
  }
  rep.classes = static_cast<int>(reps.size());
  rep.alarm = rep.classes > 1;
  return rep;
}

std::vector<WindingVector> enumerate_feasible_windings(const WeightedGraph& g,
                                                       const CycleBasis& basis,
                                                       double gamma) {
  (void)g;
  if (!(gamma > 0.0 && gamma <= std::numbers::pi / 2))
    throw InvalidRange("enumerate_feasible_windings needs gamma in (0, pi/2]");
  const int c = basis.count();
  std::vector<int> bound(c);
  for (int s = 0; s < c; ++s) {
    const auto len = static_cast<double>(basis.cycles[s].size() - 1);
    bound[s] = static_cast<int>(std::floor(len * gamma / kTwoPi));
  }
  std::vector<WindingVector> cells{WindingVector::Zero(c)};
  for (int s = 0; s < c; ++s) {
    std::vector<WindingVector> next;
    next.reserve(cells.size() * (2 * bound[s] + 1));
    for (const WindingVector& base : cells)
      for (int v = -bound[s]; v <= bound[s]; ++v) {
        WindingVector w = base;
        w[s] = v;
        next.push_back(w);
      }
    cells.swap(next);
  }
  return cells;
}

}  // namespace ksc
