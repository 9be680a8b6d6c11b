#include "spl/ghost.hpp"

#include <cmath>
#include <string>

#include "spl/error.hpp"
#include "spl/signed.hpp"

namespace spl {

GhostGraph build_ghost(const Partition& partition) {
  const WeightedGraph& g = partition.graph();
  const int n = g.vertex_count();
  GhostGraph out{partition, n, n + 2 * static_cast<int>(partition.boundary().size()), {}, {}};
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!partition.is_boundary(e)) out.edges.push_back(g.edge(e));
  }
  const auto boundary = partition.boundary();
  for (std::size_t b = 0; b < boundary.size(); ++b) {
    const Edge& e = g.edge(boundary[b]);
    GhostPair p{boundary[b], e.i, e.j, n + 2 * static_cast<int>(b), n + 2 * static_cast<int>(b) + 1, e.w};
    out.edges.push_back({p.i, p.k, 2 * e.w});
    out.edges.push_back({p.j, p.l, 2 * e.w});
    out.pairs.push_back(p);
  }
  return out;
}

Eigen::VectorXd anticontinuous_extension(const GhostGraph& ghost, const Eigen::VectorXd& u) {
  if (u.size() != ghost.base_vertex_count) {
    throw Error(ErrorKind::InvalidInput, "vector length does not match vertex count");
  }
  Eigen::VectorXd out(ghost.vertex_count);
  out.head(ghost.base_vertex_count) = u;
  for (const GhostPair& p : ghost.pairs) {
    out[p.k] = (u[p.i] - u[p.j]) / 2;
    out[p.l] = (u[p.j] - u[p.i]) / 2;
  }
  return out;
}

Eigen::MatrixXd extension_matrix(const GhostGraph& ghost) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(ghost.vertex_count, ghost.base_vertex_count);
  for (int v = 0; v < ghost.base_vertex_count; ++v) t(v, v) = 1.0;
  for (const GhostPair& p : ghost.pairs) {
    t(p.k, p.i) = 0.5;
    t(p.k, p.j) = -0.5;
    t(p.l, p.j) = 0.5;
    t(p.l, p.i) = -0.5;
  }
  return t;
}

Eigen::MatrixXd restriction_matrix(const GhostGraph& ghost) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(ghost.base_vertex_count, ghost.vertex_count);
  for (int v = 0; v < ghost.base_vertex_count; ++v) r(v, v) = 1.0;
  return r;
}

Eigen::MatrixXd mass_matrix(const GhostGraph& ghost) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(ghost.vertex_count, ghost.vertex_count);
  for (int v = 0; v < ghost.base_vertex_count; ++v) m(v, v) = 1.0;
  return m;
}

Eigen::MatrixXd ghost_operator(const GhostGraph& ghost) {
  const int n = ghost.base_vertex_count;
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(ghost.vertex_count, ghost.vertex_count);
  // Laplacian rows, only for vertices of V.
  for (const Edge& e : ghost.edges) {
    for (auto [a, b] : {std::pair{e.i, e.j}, std::pair{e.j, e.i}}) {
      if (a >= n) continue;
      op(a, a) += e.w;
      op(a, b) -= e.w;
    }
  }
  for (const GhostPair& p : ghost.pairs) {
    op(p.k, p.k) = 1.0;
    op(p.k, p.l) = 1.0;
    op(p.l, p.k) = 1.0;
    op(p.l, p.i) = -1.0;
    op(p.l, p.j) = 1.0;
    op(p.l, p.l) = -1.0;
  }
  return op;
}

Eigen::MatrixXd reduced_operator(const GhostGraph& ghost) {
  return restriction_matrix(ghost) * ghost_operator(ghost) * extension_matrix(ghost);
}

bool verify_discretization(const Partition& partition, double tol) {
  const Eigen::MatrixXd reduced = reduced_operator(build_ghost(partition));
  const Eigen::MatrixXd expected = partition_laplacian(partition);
  for (Eigen::Index i = 0; i < expected.rows(); ++i) {
    for (Eigen::Index j = 0; j < expected.cols(); ++j) {
      if (std::abs(reduced(i, j) - expected(i, j)) > tol) {
        throw Error(ErrorKind::MismatchAt, "reduced operator differs at (" + std::to_string(i) +
                                               "," + std::to_string(j) + ")");
      }
    }
  }
  return true;
}

}  // namespace spl
