#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ksc/errors.hpp"

namespace ksc {

struct Edge {
  int i;     // lower endpoint
  int j;     // higher endpoint
  double w;  // positive weight
};

// Weighted undirected connected graph with a canonical edge orientation:
// every edge is stored with i < j and its incidence column carries +1 at i,
// -1 at j. Spectral quantities are computed once at construction; the object
// is immutable afterwards and safe to share across threads.
class WeightedGraph {
 public:
  WeightedGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Index of edge {i, j} in either vertex order, or -1 if absent.
  int edge_index(int i, int j) const;

  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

 private:
  friend double algebraic_connectivity(const WeightedGraph&);
  friend double max_weighted_degree(const WeightedGraph&);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // vertex -> incident edge indices
  double lambda2_ = 0.0;
  double d_max_ = 0.0;
};

// Fundamental cycle basis from a BFS spanning tree rooted at vertex 0.
// cycle_edge_matrix row sigma has entry +1 where the cycle traverses an edge
// along its canonical orientation, -1 against it, 0 elsewhere. The spanning
// tree used for the construction is kept because the lift and the samplers
// reuse it.
struct CycleBasis {
  std::vector<std::vector<int>> cycles;  // vertex sequences, first == last
  Eigen::MatrixXi cycle_edge_matrix;     // c x m, entries in {-1, 0, +1}
  Eigen::MatrixXd cycle_pinv;            // m x c Moore-Penrose pseudoinverse
  std::vector<int> tree_parent;          // -1 at the root
  std::vector<int> tree_edge;            // edge index of the parent link
  std::vector<int> bfs_order;            // vertices in visit order

  int count() const { return static_cast<int>(cycles.size()); }
};

// Incidence matrix B (n x m): column e of edge (i, j), i < j, has +1 at row i
// and -1 at row j.
Eigen::MatrixXd incidence_matrix(const WeightedGraph& g);

// L = B diag(w) B^T.
Eigen::MatrixXd laplacian(const WeightedGraph& g);

// Second-smallest Laplacian eigenvalue (Fiedler value).
double algebraic_connectivity(const WeightedGraph& g);

// max_i sum_j a_ij.
double max_weighted_degree(const WeightedGraph& g);

// Fundamental cycles of a BFS spanning tree rooted at vertex 0, ties broken
// by lowest vertex index. Trees yield an empty basis.
CycleBasis cycle_basis(const WeightedGraph& g);

}  // namespace ksc
