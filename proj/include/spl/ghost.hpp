#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spl/graph.hpp"

namespace spl {

/// One boundary edge (i, j) replaced by two pendant edges (i, k) and (j, l)
/// of weight 2w, where k and l are fresh ghost vertices.
struct GhostPair {
  int source_edge = 0;
  int i = 0;
  int j = 0;
  int k = 0;  // ghost attached to i
  int l = 0;  // ghost attached to j
  double w = 0.0;  // weight of the original edge
};

/// The augmented graph. Ghost vertices follow the original ones: the b-th
/// boundary edge gets k = n + 2b and l = n + 2b + 1.
struct GhostGraph {
  Partition partition;
  int base_vertex_count = 0;
  int vertex_count = 0;
  std::vector<Edge> edges;  // non-boundary edges of G, then the ghost edges
  std::vector<GhostPair> pairs;
};

GhostGraph build_ghost(const Partition& partition);

/// u' = T u: u'_k = (u_i - u_j)/2 and u'_l = (u_j - u_i)/2 on each pair.
Eigen::VectorXd anticontinuous_extension(const GhostGraph& ghost, const Eigen::VectorXd& u);

/// T as a |V'| × |V| matrix.
Eigen::MatrixXd extension_matrix(const GhostGraph& ghost);
/// R as a |V| × |V'| matrix that drops the ghost coordinates.
Eigen::MatrixXd restriction_matrix(const GhostGraph& ghost);
/// Mass matrix: identity on V, zero on ghosts.
Eigen::MatrixXd mass_matrix(const GhostGraph& ghost);

/// Rows of V hold the plain Laplacian of G'. Row k holds u_k + u_l and row l
/// holds u_k - u_i + u_j - u_l, the two anticontinuity conditions.
Eigen::MatrixXd ghost_operator(const GhostGraph& ghost);

/// R · ghost_operator · T.
Eigen::MatrixXd reduced_operator(const GhostGraph& ghost);

/// Compares the reduced operator against the partition Laplacian entrywise.
/// Returns true or throws MismatchAt naming the first bad entry.
bool verify_discretization(const Partition& partition, double tol = 1e-13);

}  // namespace spl
