#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spl/graph.hpp"
#include "spl/param_partition.hpp"
#include "spl/signed.hpp"
#include "spl/spectral.hpp"

namespace spl {

/// A critical point of Λ(P, ·) on the equipartition manifold together with
/// the eigenvector of L^∂P it corresponds to.
struct CriticalPoint {
  ParamPoint alpha;
  Eigen::VectorXd psi;  // unit norm, strictly positive
  int eigen_index = 0;  // 1-based index of the eigenvalue in L^∂P
  double energy = 0.0;
  int nu = 0;
  int deficiency = 0;   // eigen_index - nu
  double projected_gradient = 0.0;
  std::optional<int> morse_index;
  std::vector<double> hessian_eigenvalues;
  std::vector<double> certificate;  // c_k
};

/// Why an eigenvector of L^∂P did or did not produce a critical point.
struct EigenvectorScreen {
  int eigen_index = 0;
  bool nondegenerate = false;
  bool positive = false;
  bool claimed = false;
};

struct CriticalScan {
  std::vector<CriticalPoint> points;
  std::vector<EigenvectorScreen> screens;
};

/// Every non-degenerate eigenvector of L^∂P that is one-signed yields a
/// candidate α = ψ_j/ψ_i, kept when it is an equipartition with projected
/// gradient below 1e-7.
CriticalScan scan_critical_points(const Partition& partition, const Tolerances& tol = {});
std::vector<CriticalPoint> critical_points_from_spectrum(const Partition& partition,
                                                         const Tolerances& tol = {});

/// Norm of the gradient of Λ restricted to the tangent space of the
/// equipartition manifold at α.
double projected_gradient(const Partition& partition, const ParamPoint& point);

/// c_k = Σ_{V_k} ψ_i^2, checked against the stationarity equation on every
/// boundary edge and the reconstruction ψ = Σ √c_k f_k. Throws
/// CertificateFailure.
std::vector<double> lagrange_certificate(const Partition& partition, const CriticalPoint& point,
                                         double tol = 1e-8);

/// Forward direction: c spans ker(dΦᵀ) normalized to Σ c = 1. Returns
/// nullopt when that kernel is trivial or not one-signed.
std::optional<std::vector<double>> certificate_from_jacobian(const Partition& partition,
                                                             const ParamPoint& point);

/// ψ = Σ_k √c_k f(G_k, α).
Eigen::VectorXd eigenvector_from_certificate(const Partition& partition, const ParamPoint& point,
                                             const std::vector<double>& c);

struct MorseResult {
  int index = 0;
  std::vector<double> hessian_eigenvalues;  // ascending
  int tangent_dimension = 0;
};

/// Constrained Hessian of Λ on the equipartition manifold, in orthonormal
/// log-coordinate tangent directions, via the Lagrangian Σ c_k φ_k. Refuses
/// tree partitions. Throws DegenerateHessian.
MorseResult morse_index(const Partition& partition, const CriticalPoint& point,
                        const Tolerances& tol = {});

enum class CurveExtremum { Max, Min };

struct CurveCritical {
  double alpha = 0.0;
  double eigenvalue = 0.0;
  Eigen::VectorXd psi;  // eigenvector of λ_m at alpha
  CurveExtremum kind = CurveExtremum::Min;
  bool positive_branch = false;   // α = ψ_j/ψ_i, otherwise α = -ψ_j/ψ_i
  double branch_residual = 0.0;   // relative distance to the branch value
  // Only on the positive branch, where the eigenvalue is shared with the base.
  std::optional<int> base_index;  // n
  std::optional<int> index_shift; // Δm = n - m
  std::optional<int> max_flag;    // M
};

struct EdgeCurve {
  int edge = 0;
  int m = 0;
  std::vector<double> grid;
  std::vector<double> values;     // λ_m along the grid
  std::vector<char> simple;       // λ_m simple at each grid point
  std::vector<int> flagged_segments;  // segment k joins grid[k] and grid[k+1]
  std::vector<CurveCritical> criticals;
};

/// λ_m of base + w B(α) as α runs over the grid, where B sits on the
/// endpoints of edge. Critical points are bracketed by sign changes of
/// ψ_i^2 - ψ_j^2/α^2 and bisected to 1e-10. Throws DegenerateSegment if
/// simplicity is lost inside a bracketing interval.
EdgeCurve edge_curve_operator(const SymOperator& base, const Edge& edge, int edge_id, int m,
                              std::vector<double> grid, const Tolerances& tol = {});

/// Single-edge curve on a signed graph: the edge must be negative in σ, and
/// the base operator is L^σ.
EdgeCurve edge_curve(const Signature& sigma, int edge, int m, std::vector<double> grid,
                     const Tolerances& tol = {});

/// Sign of λ_m'' at a critical α of base + w B(α), from the derivative
/// formula evaluated at α ± h. Throws ClassificationAmbiguous.
CurveExtremum classify_curve_critical(const SymOperator& base, const Edge& edge, int m,
                                      double alpha);

struct RestorationStep {
  int edge = 0;
  double alpha = 0.0;
  int index_before = 0;  // index of Λ before restoring the edge
  CurveExtremum kind = CurveExtremum::Min;
  int max_flag = 0;
};

struct RestorationReport {
  std::vector<int> removed_edges;  // R
  int tree_index = 0;              // index of Λ with all of R removed
  std::vector<RestorationStep> steps;
  int predicted_index = 0;         // ν + Σ M
  int actual_index = 0;
};

/// Removes a cycle-breaking set R of boundary edges (the non-tree edges of a
/// spanning tree of the partition multigraph, scanning boundary edges in
/// ascending id order) and restores them one at a time.
RestorationReport deficiency_via_edge_restoration(const Partition& partition,
                                                  const CriticalPoint& point);

}  // namespace spl
