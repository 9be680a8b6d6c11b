#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spl/graph.hpp"
#include "spl/signed.hpp"
#include "spl/spectral.hpp"

namespace spl {

/// Boundary parameters α, one per boundary edge, aligned with
/// Partition::boundary(). For edge (i, j) with i < j the potential w·α is
/// added at i and w/α at j.
struct ParamPoint {
  std::vector<double> alpha;

  Eigen::VectorXd as_vector() const {
    return Eigen::Map<const Eigen::VectorXd>(alpha.data(), static_cast<Eigen::Index>(alpha.size()));
  }
  static ParamPoint from_vector(const Eigen::VectorXd& v) {
    return {std::vector<double>(v.data(), v.data() + v.size())};
  }
};

/// B(α) = [[α, -1], [-1, 1/α]]. Throws ZeroAlpha.
Eigen::Matrix2d edge_perturbation(double alpha);

/// L^∂P(G) + Σ_{(i,j) ∈ ∂P} w_ij B_ij(α_ij), assembled as that literal sum.
/// Entries coupling different components come out exactly zero.
SymOperator perturbed_operator(const Partition& partition, const ParamPoint& point);

/// Block of the perturbed operator on component k, in the component's local
/// vertex order: the component Laplacian plus the diagonal potential
/// Σ w (1 + α) at the i-end and Σ w (1 + 1/α) at the j-end of each boundary
/// edge.
Eigen::MatrixXd component_block(const Partition& partition, const ParamPoint& point, int k);

struct ComponentGroundState {
  int component = 0;
  double eigenvalue = 0.0;
  Eigen::VectorXd f;  // local order, unit norm, positive
  double block_gap = 0.0;

  /// f extended by zero to every vertex.
  Eigen::VectorXd extended(const Partition& partition) const;
};

/// First eigenpair of every block. Requires every α entry positive.
std::vector<ComponentGroundState> ground_states(const Partition& partition,
                                                const ParamPoint& point);

/// Φ(α) = (λ_1(G_1, α), ..., λ_1(G_ν, α)).
Eigen::VectorXd phi(const Partition& partition, const ParamPoint& point);
/// Λ(P, α) = max_k λ_1(G_k, α).
double energy(const Partition& partition, const ParamPoint& point);

bool is_equipartition(const Partition& partition, const ParamPoint& point,
                      double eq_tol = 1e-10);

/// ν × |∂P| analytic Jacobian of Φ: column (i,j) holds w f_i^2 in row s(i)
/// and -w f_j^2 / α^2 in row s(j). Throws DegenerateBlock if a ground state is not
/// simple.
Eigen::MatrixXd phi_jacobian(const Partition& partition, const ParamPoint& point,
                             double gap_rel = 1e-8);
Eigen::MatrixXd phi_jacobian(const Partition& partition, const ParamPoint& point,
                             const std::vector<ComponentGroundState>& states);

/// α_ij = ψ_j / ψ_i for a non-degenerate eigenvector of L^∂P whose nodal
/// partition is P. ψ may be given with either global sign.
/// Throws WrongNodalPartition or DegenerateEigenvector.
ParamPoint alpha_from_eigenvector(const Partition& partition, const Eigen::VectorXd& psi,
                                  const Tolerances& tol = {});

struct SolveOptions {
  double eq_tol = 1e-10;
  int max_iter = 100;
};

/// Damped Newton on r = Φ - mean(Φ) in log coordinates β = log α, using
/// minimum-norm steps of dΦ·diag(α) and halving steps until the residual drops.
/// Throws LeftPositiveOrthant when α drifts to 0 or ∞ (outside [1e-12, 1e12]),
/// NoConvergence otherwise.
ParamPoint solve_equipartition(const Partition& partition, const ParamPoint& start,
                               const SolveOptions& opts = {});

/// I - 11ᵀ/ν, the projector off the diagonal of R^ν.
Eigen::MatrixXd off_diagonal_projector(int nu);

/// α·exp(dβ): a displacement in log coordinates.
ParamPoint shift_log(const ParamPoint& point, const Eigen::VectorXd& dbeta);

/// Orthonormal bases at an equipartition point, in log coordinates: tangent
/// spans ker(Q dΦ diag(α)), normal its orthogonal complement in R^{|∂P|}.
struct ManifoldFrame {
  Eigen::MatrixXd tangent;
  Eigen::MatrixXd normal;
  Eigen::VectorXd singular_values;  // of Q dΦ diag(α), descending
};

ManifoldFrame manifold_frame(const Partition& partition, const ParamPoint& point);

/// Newton solve of Q Φ(shift_log(point, normal·s)) = 0 over s.
/// Throws RetractionFailure.
ParamPoint retract(const Partition& partition, const ParamPoint& point,
                   const Eigen::MatrixXd& normal, double eq_tol = 1e-13, int max_iter = 50);

}  // namespace spl
