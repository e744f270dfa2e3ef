#include "ksc/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace ksc {

namespace {

// Connectivity threshold relative to the weight scale; see
// algebraic_connectivity below.
double connectivity_tolerance(const std::vector<Edge>& edges) {
  double mean_w = 0.0;
  for (const Edge& e : edges) mean_w += e.w;
  mean_w /= static_cast<double>(edges.size());
  return 1e-8 * mean_w;
}

}  // namespace

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 2) throw InvalidGraph("graph needs at least 2 vertices");
  if (edges.empty()) throw NotConnected("graph has no edges");

  edges_.reserve(edges.size());
  std::set<std::pair<int, int>> seen;
  for (Edge e : edges) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i < 0 || e.j >= n) throw InvalidGraph("edge endpoint out of range");
    if (e.i == e.j) throw InvalidGraph("self-loop");
    if (!seen.insert({e.i, e.j}).second) throw InvalidGraph("duplicate edge");
    if (!(e.w > 0.0)) throw InvalidGraph("nonpositive edge weight");
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });

  adj_.assign(n_, {});
  for (int e = 0; e < m(); ++e) {
    adj_[edges_[e].i].push_back(e);
    adj_[edges_[e].j].push_back(e);
  }

  Eigen::VectorXd deg = Eigen::VectorXd::Zero(n_);
  for (const Edge& e : edges_) {
    deg[e.i] += e.w;
    deg[e.j] += e.w;
  }
  d_max_ = deg.maxCoeff();

  // Connectivity is validated through the Fiedler value: the eigensolve is
  // needed anyway and lambda2 > 0 iff the graph is connected.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian(*this));
  lambda2_ = es.eigenvalues()(1);
  if (lambda2_ <= connectivity_tolerance(edges_))
    throw NotConnected("graph is not connected (lambda2 ~ 0)");
}

int WeightedGraph::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (int e : adj_[i])
    if (edges_[e].i == i && edges_[e].j == j) return e;
  return -1;
}

Eigen::MatrixXd incidence_matrix(const WeightedGraph& g) {
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(g.n(), g.m());
  for (int e = 0; e < g.m(); ++e) {
    B(g.edges()[e].i, e) = 1.0;
    B(g.edges()[e].j, e) = -1.0;
  }
  return B;
}

Eigen::MatrixXd laplacian(const WeightedGraph& g) {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (const Edge& e : g.edges()) {
    L(e.i, e.i) += e.w;
    L(e.j, e.j) += e.w;
    L(e.i, e.j) -= e.w;
    L(e.j, e.i) -= e.w;
  }
  return L;
}

double algebraic_connectivity(const WeightedGraph& g) {
  if (g.lambda2_ <= connectivity_tolerance(g.edges()))
    throw NotConnected("lambda2 below spectral tolerance");
  return g.lambda2_;
}

double max_weighted_degree(const WeightedGraph& g) { return g.d_max_; }

CycleBasis cycle_basis(const WeightedGraph& g) {
  const int n = g.n();
  const int m = g.m();

  CycleBasis basis;
  basis.tree_parent.assign(n, -1);
  basis.tree_edge.assign(n, -1);

  // BFS from vertex 0; adjacency lists are edge-sorted, so neighbors are
  // visited in increasing vertex order.
  std::vector<bool> visited(n, false);
  std::vector<bool> in_tree(m, false);
  std::deque<int> queue{0};
  visited[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    basis.bfs_order.push_back(v);
    std::vector<std::pair<int, int>> nbrs;  // (neighbor, edge)
    for (int e : g.adjacency()[v]) {
      int u = g.edges()[e].i == v ? g.edges()[e].j : g.edges()[e].i;
      nbrs.emplace_back(u, e);
    }
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [u, e] : nbrs) {
      if (visited[u]) continue;
      visited[u] = true;
      in_tree[e] = true;
      basis.tree_parent[u] = v;
      basis.tree_edge[u] = e;
      queue.push_back(u);
    }
  }

  // Fundamental cycle of a non-tree edge (i, j): tree path j -> i, then the
  // edge itself closes the walk back to j.
  std::vector<Eigen::VectorXi> rows;
  auto root_path = [&](int v) {
    std::vector<int> path{v};
    while (basis.tree_parent[path.back()] >= 0)
      path.push_back(basis.tree_parent[path.back()]);
    return path;
  };
  for (int e = 0; e < m; ++e) {
    if (in_tree[e]) continue;
    const int i = g.edges()[e].i;
    const int j = g.edges()[e].j;
    std::vector<int> pi = root_path(i);
    std::vector<int> pj = root_path(j);
    // Drop the common tail above the lowest common ancestor.
    while (pi.size() > 1 && pj.size() > 1 &&
           pi[pi.size() - 2] == pj[pj.size() - 2]) {
      pi.pop_back();
      pj.pop_back();
    }
    std::vector<int> cycle = pj;  // j, ..., lca
    cycle.insert(cycle.end(), pi.rbegin() + 1, pi.rend());  // ..., i
    cycle.push_back(j);

    Eigen::VectorXi row = Eigen::VectorXi::Zero(m);
    for (size_t k = 0; k + 1 < cycle.size(); ++k) {
      const int a = cycle[k];
      const int b = cycle[k + 1];
      const int ce = g.edge_index(a, b);
      row[ce] = (g.edges()[ce].i == a) ? 1 : -1;
    }
    rows.push_back(row);
    basis.cycles.push_back(std::move(cycle));
  }

  const int c = static_cast<int>(rows.size());
  basis.cycle_edge_matrix.resize(c, m);
  for (int s = 0; s < c; ++s) basis.cycle_edge_matrix.row(s) = rows[s].transpose();

  // Cached right pseudoinverse C^T (C C^T)^{-1}; C has full row rank because
  // each fundamental cycle owns its non-tree edge.
  if (c > 0) {
    Eigen::MatrixXd C = basis.cycle_edge_matrix.cast<double>();
    basis.cycle_pinv = C.transpose() * (C * C.transpose()).ldlt().solve(
                                           Eigen::MatrixXd::Identity(c, c));
  } else {
    basis.cycle_pinv.resize(m, 0);
  }
  return basis;
}

}  // namespace ksc
