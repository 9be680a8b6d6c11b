#include "spl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spl/error.hpp"

namespace spl {

bool SpectrumReport::is_simple(int n, double gap_rel) const {
  return gap(n) > gap_rel * std::max(operator_norm, 1.0);
}

SpectrumReport eigendecompose(const SymOperator& op) {
  if (op.rows() != op.cols() || op.rows() == 0) {
    throw Error(ErrorKind::InvalidInput, "operator must be a non-empty square matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "symmetric eigensolver did not converge");
  }
  SpectrumReport r;
  const Eigen::Index n = op.rows();
  r.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  r.eigenvectors = solver.eigenvectors();

  for (Eigen::Index k = 0; k < n; ++k) {
    auto col = r.eigenvectors.col(k);
    const double peak = col.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(col[i]) >= peak * (1.0 - 1e-9)) {
        if (col[i] < 0) col = -col;
        break;
      }
    }
  }

  r.gaps.assign(n, std::numeric_limits<double>::infinity());
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k > 0) r.gaps[k] = std::min(r.gaps[k], r.eigenvalues[k] - r.eigenvalues[k - 1]);
    if (k + 1 < n) r.gaps[k] = std::min(r.gaps[k], r.eigenvalues[k + 1] - r.eigenvalues[k]);
  }
  r.operator_norm = std::max(std::abs(r.eigenvalues.front()), std::abs(r.eigenvalues.back()));
  return r;
}

bool is_nondegenerate(const SpectrumReport& report, int index, double zero_tol, double gap_rel) {
  if (index < 1 || index > report.size()) {
    throw Error(ErrorKind::InvalidInput, "eigen-index " + std::to_string(index) + " out of range");
  }
  if (!report.is_simple(index, gap_rel)) return false;
  const Eigen::VectorXd v = report.vector(index);
  const double peak = v.cwiseAbs().maxCoeff();
  return v.cwiseAbs().minCoeff() > zero_tol * peak;
}

NodalReport nodal_report(const Signature& sigma, const Eigen::VectorXd& u,
                         std::optional<int> eigen_index, double zero_tol) {
  const WeightedGraph& g = sigma.graph();
  if (u.size() != g.vertex_count()) {
    throw Error(ErrorKind::InvalidInput, "vector length does not match vertex count");
  }
  const double peak = u.cwiseAbs().maxCoeff();
  if (!(peak > 0.0)) throw Error(ErrorKind::AllZeroVector, "vector is identically zero");

  NodalReport r;
  std::vector<char> keep_v(g.vertex_count(), 1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (std::abs(u[v]) <= zero_tol * peak) {
      keep_v[v] = 0;
      r.zero_vertices.push_back(v);
    }
  }
  std::vector<char> keep_e(g.edge_count(), 1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!keep_v[ed.i] || !keep_v[ed.j]) continue;
    if (u[ed.i] * sigma.sign(e) * u[ed.j] < 0) {
      r.nodal_edges.push_back(e);
      keep_e[e] = 0;
    }
  }
  r.domain_count = component_labels(g, keep_v, keep_e, r.domain_of);
  r.eigen_index = eigen_index;
  if (eigen_index && !r.has_zeros()) r.deficiency = *eigen_index - r.domain_count;
  return r;
}

std::optional<Partition> nodal_partition(const Signature& sigma, const Eigen::VectorXd& u,
                                         double zero_tol) {
  NodalReport r = nodal_report(sigma, u, std::nullopt, zero_tol);
  if (r.has_zeros()) return std::nullopt;
  Partition p = make_partition(sigma.graph(), r.domain_of);
  if (!boundary_is_nodal_set(p, r)) return std::nullopt;
  return p;
}

bool boundary_is_nodal_set(const Partition& partition, const NodalReport& report) {
  const auto b = partition.boundary();
  return std::equal(b.begin(), b.end(), report.nodal_edges.begin(), report.nodal_edges.end());
}

std::vector<CourantRow> courant_check(const Signature& sigma, const Tolerances& tol) {
  const SpectrumReport spec = eigendecompose(signed_laplacian(sigma));
  std::vector<CourantRow> rows;
  for (int n = 1; n <= spec.size(); ++n) {
    if (!is_nondegenerate(spec, n, tol.zero_tol, tol.gap_rel)) continue;
    const NodalReport nr = nodal_report(sigma, spec.vector(n), n, tol.zero_tol);
    rows.push_back({n, nr.domain_count, n - nr.domain_count});
    if (nr.domain_count > n) {
      throw Error(ErrorKind::CourantViolation,
                  "eigenvector " + std::to_string(n) + " has " + std::to_string(nr.domain_count) +
                      " nodal domains");
    }
  }
  return rows;
}

}  // namespace spl
