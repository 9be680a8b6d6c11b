#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "spl/signed.hpp"

namespace spl {

/// Numerical thresholds shared across modules.
struct Tolerances {
  /// |u_i| <= zero_tol * ||u||_inf counts as a zero entry.
  double zero_tol = 1e-9;
  /// An eigenvalue is simple when its gap exceeds gap_rel * ||M||.
  double gap_rel = 1e-8;
  /// Equipartition: max - min of Φ <= eq_tol * max(1, Λ).
  double eq_tol = 1e-10;
  /// Hessian eigenvalues within hess_rel * max|eig| of zero are degenerate.
  double hess_rel = 1e-6;
};

/// Full eigendecomposition of a symmetric operator.
///
/// Eigen-indices in this library are 1-based, matching λ_1 <= λ_2 <= ...;
/// use value(n) and vector(n) rather than indexing the storage directly.
struct SpectrumReport {
  std::vector<double> eigenvalues;  // ascending, repeated by multiplicity
  Eigen::MatrixXd eigenvectors;     // column k holds the vector for eigenvalues[k]
  std::vector<double> gaps;         // distance to the nearest other eigenvalue
  double operator_norm = 0.0;       // max |λ|

  int size() const { return static_cast<int>(eigenvalues.size()); }
  double value(int n) const { return eigenvalues[n - 1]; }
  Eigen::VectorXd vector(int n) const { return eigenvectors.col(n - 1); }
  double gap(int n) const { return gaps[n - 1]; }
  bool is_simple(int n, double gap_rel = 1e-8) const;
};

/// Dense symmetric solve. Each eigenvector's entry of largest magnitude (the
/// first one, on near-ties) is made positive. Throws ConvergenceFailure.
SpectrumReport eigendecompose(const SymOperator& op);

/// Simple eigenvalue and no entry of the eigenvector near zero.
bool is_nondegenerate(const SpectrumReport& report, int index, double zero_tol = 1e-9,
                      double gap_rel = 1e-8);

/// Strong nodal structure of a vector on a signed graph.
///
/// Zero entries (|u_i| <= zero_tol * ||u||_inf) are deleted before domains are
/// counted. With zero entries present no deficiency is assigned.
struct NodalReport {
  std::vector<int> nodal_edges;    // edge ids with u_i σ_ij u_j < 0
  std::vector<int> domain_of;      // per vertex, -1 on zero vertices
  int domain_count = 0;
  std::vector<int> zero_vertices;
  std::optional<int> eigen_index;
  std::optional<int> deficiency;   // eigen_index - domain_count

  bool has_zeros() const { return !zero_vertices.empty(); }
};

NodalReport nodal_report(const Signature& sigma, const Eigen::VectorXd& u,
                         std::optional<int> eigen_index = std::nullopt,
                         double zero_tol = 1e-9);

/// Partition whose components are the nodal domains of u and whose boundary is
/// the nodal set. Returns nullopt if u has zero entries or if some nodal edge
/// joins two vertices of one domain, since no partition has that boundary.
std::optional<Partition> nodal_partition(const Signature& sigma, const Eigen::VectorXd& u,
                                         double zero_tol = 1e-9);

bool boundary_is_nodal_set(const Partition& partition, const NodalReport& report);

struct CourantRow {
  int index;
  int domains;
  int deficiency;
};

/// One row per non-degenerate eigenvector of L^σ. Throws CourantViolation if
/// any row has more domains than its index.
std::vector<CourantRow> courant_check(const Signature& sigma, const Tolerances& tol = {});

}  // namespace spl
