#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ksc/graph.hpp"
#include "ksc/seminorm.hpp"
#include "test_support.hpp"

using namespace ksc;
using namespace ksc::testing;

TEST_CASE("construction validates structure") {
  CHECK_THROWS_AS(WeightedGraph(1, {{0, 0, 1.0}}), InvalidGraph);
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 0, 1.0}}), InvalidGraph);
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, 1.0}, {1, 0, 1.0}}), InvalidGraph);
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, 0.0}}), InvalidGraph);
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, -2.0}}), InvalidGraph);
  CHECK_THROWS_AS(WeightedGraph(3, {{0, 5, 1.0}}), InvalidGraph);
  // Two components.
  CHECK_THROWS_AS(WeightedGraph(4, {{0, 1, 1.0}, {2, 3, 1.0}}), NotConnected);
  CHECK_THROWS_AS(WeightedGraph(2, {}), NotConnected);
}

TEST_CASE("incidence matrix orientation and column sums") {
  const WeightedGraph single(2, {{0, 1, 1.0}});
  const Eigen::MatrixXd B1 = incidence_matrix(single);
  CHECK(B1(0, 0) == 1.0);
  CHECK(B1(1, 0) == -1.0);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph g = random_connected_graph(8, 4, rng);
    const Eigen::MatrixXd B = incidence_matrix(g);
    CHECK(B.colwise().sum().cwiseAbs().maxCoeff() == 0.0);
  }

  // Incidence of a connected graph has rank n-1.
  const Eigen::MatrixXd B3 = incidence_matrix(make_k3());
  Eigen::FullPivLU<Eigen::MatrixXd> lu(B3);
  CHECK(lu.rank() == 2);
}

TEST_CASE("laplacian assembly") {
  const WeightedGraph single(2, {{0, 1, 1.0}});
  Eigen::MatrixXd L = laplacian(single);
  CHECK(L(0, 0) == doctest::Approx(1.0));
  CHECK(L(0, 1) == doctest::Approx(-1.0));
  CHECK(L(1, 0) == doctest::Approx(-1.0));
  CHECK(L(1, 1) == doctest::Approx(1.0));

  const Eigen::MatrixXd L3 = laplacian(make_k3());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(L3(i, j) == doctest::Approx(i == j ? 2.0 : -1.0));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph g = random_connected_graph(9, 5, rng);
    const Eigen::MatrixXd L = laplacian(g);
    CHECK((L * Eigen::VectorXd::Ones(9)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((L - L.transpose()).norm() == 0.0);
    // L = B diag(w) B^T route.
    const Eigen::MatrixXd B = incidence_matrix(g);
    Eigen::VectorXd w(g.m());
    for (int e = 0; e < g.m(); ++e) w[e] = g.edges()[e].w;
    CHECK((L - B * w.asDiagonal() * B.transpose()).norm() < 1e-12);
  }
}

TEST_CASE("algebraic connectivity on reference graphs") {
  CHECK(algebraic_connectivity(make_k3()) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(algebraic_connectivity(make_path(3)) ==
        doctest::Approx(1.0).epsilon(1e-9));
  // Ring of 5: lambda2 = 2 - 2 cos(2 pi / 5).
  CHECK(algebraic_connectivity(make_ring(5)) ==
        doctest::Approx(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / 5))
            .epsilon(1e-9));
}

TEST_CASE("lambda2 scales with the weights") {
  std::mt19937_64 rng(3);
  const WeightedGraph g = random_connected_graph(7, 3, rng);
  std::vector<Edge> scaled = g.edges();
  const double alpha = 3.7;
  for (Edge& e : scaled) e.w *= alpha;
  const WeightedGraph ga(7, scaled);
  CHECK(algebraic_connectivity(ga) ==
        doctest::Approx(alpha * algebraic_connectivity(g)).epsilon(1e-9));
}

TEST_CASE("laplacian spectrum: PSD, ordering, lambda2 against 1-perp solve") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph g = random_connected_graph(10, 6, rng);
    const Eigen::MatrixXd L = laplacian(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
    const Eigen::VectorXd ev = es.eigenvalues();
    CHECK(ev.minCoeff() >= -1e-10);
    CHECK(std::abs(ev(0)) < 1e-9);
    CHECK(ev(1) > 0.0);

    // Independent route: smallest eigenvalue of R L R^T.
    const ConsensusProjector proj(g.n());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esr(proj.compress(L));
    CHECK(algebraic_connectivity(g) ==
          doctest::Approx(esr.eigenvalues().minCoeff()).epsilon(1e-9));
  }
}

TEST_CASE("max weighted degree") {
  CHECK(max_weighted_degree(WeightedGraph(2, {{0, 1, 1.0}})) == 1.0);
  CHECK(max_weighted_degree(make_k3()) == 2.0);
  CHECK(max_weighted_degree(make_star(4)) == 3.0);
}

TEST_CASE("cycle basis on trees and small graphs") {
  const CycleBasis tree_basis = cycle_basis(make_path(6));
  CHECK(tree_basis.count() == 0);
  CHECK(tree_basis.cycle_edge_matrix.rows() == 0);

  const CycleBasis k3_basis = cycle_basis(make_k3());
  REQUIRE(k3_basis.count() == 1);
  CHECK(k3_basis.cycles[0].size() == 4);  // closed triangle

  const WeightedGraph ring5 = make_ring(5);
  const CycleBasis r5 = cycle_basis(ring5);
  REQUIRE(r5.count() == 1);
  CHECK(r5.cycles[0].size() == 6);
  for (int e = 0; e < 5; ++e) CHECK(std::abs(r5.cycle_edge_matrix(0, e)) == 1);
}

TEST_CASE("cycle space is the kernel of the incidence matrix") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 12; ++trial) {
    const WeightedGraph g = random_connected_graph(9, trial % 5, rng);
    const CycleBasis basis = cycle_basis(g);
    CHECK(basis.count() == g.m() - g.n() + 1);

    // Exact integer check of B C^T = 0.
    Eigen::MatrixXi Bi = Eigen::MatrixXi::Zero(g.n(), g.m());
    for (int e = 0; e < g.m(); ++e) {
      Bi(g.edges()[e].i, e) = 1;
      Bi(g.edges()[e].j, e) = -1;
    }
    const Eigen::MatrixXi prod = Bi * basis.cycle_edge_matrix.transpose();
    if (prod.size() > 0) CHECK(prod.cwiseAbs().maxCoeff() == 0);

    // Each cycle is a closed walk over existing edges with no repeats.
    for (const auto& cyc : basis.cycles) {
      REQUIRE(cyc.size() >= 4);
      CHECK(cyc.front() == cyc.back());
      std::set<int> visited(cyc.begin(), cyc.end() - 1);
      CHECK(visited.size() == cyc.size() - 1);
      for (size_t k = 1; k < cyc.size(); ++k)
        CHECK(g.edge_index(cyc[k - 1], cyc[k]) >= 0);
    }
  }
}

TEST_CASE("cycle pseudoinverse satisfies C C^+ = I") {
  const WeightedGraph g = make_figure_eight_13();
  const CycleBasis basis = cycle_basis(g);
  REQUIRE(basis.count() == 2);
  const Eigen::MatrixXd C = basis.cycle_edge_matrix.cast<double>();
  CHECK((C * basis.cycle_pinv - Eigen::MatrixXd::Identity(2, 2)).norm() <
        1e-12);
}
