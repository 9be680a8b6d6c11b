#include "spl/param_partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spl/error.hpp"

namespace spl {

namespace {

void check_size(const Partition& partition, const ParamPoint& point) {
  if (point.alpha.size() != partition.boundary().size()) {
    throw Error(ErrorKind::InvalidInput, "parameter vector has " + std::to_string(point.alpha.size()) +
                                             " entries but the boundary has " +
                                             std::to_string(partition.boundary().size()));
  }
}

void check_positive(const ParamPoint& point) {
  for (double a : point.alpha) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw Error(ErrorKind::InvalidInput, "boundary parameters must be finite and positive");
    }
  }
}

double spread(const Eigen::VectorXd& v) { return v.maxCoeff() - v.minCoeff(); }

bool equal_enough(const Eigen::VectorXd& p, double eq_tol) {
  return spread(p) <= eq_tol * std::max(1.0, p.maxCoeff());
}

Eigen::VectorXd centered(const Eigen::VectorXd& v) {
  return v.array() - v.mean();
}

}  // namespace

Eigen::Matrix2d edge_perturbation(double alpha) {
  if (alpha == 0.0) throw Error(ErrorKind::ZeroAlpha, "edge parameter must be nonzero");
  Eigen::Matrix2d b;
  b << alpha, -1.0, -1.0, 1.0 / alpha;
  return b;
}

SymOperator perturbed_operator(const Partition& partition, const ParamPoint& point) {
  check_size(partition, point);
  SymOperator op = partition_laplacian(partition);
  const auto boundary = partition.boundary();
  for (std::size_t b = 0; b < boundary.size(); ++b) {
    const Edge& e = partition.graph().edge(boundary[b]);
    const Eigen::Matrix2d block = e.w * edge_perturbation(point.alpha[b]);
    op(e.i, e.i) += block(0, 0);
    op(e.i, e.j) += block(0, 1);
    op(e.j, e.i) += block(1, 0);
    op(e.j, e.j) += block(1, 1);
  }
  return op;
}

Eigen::MatrixXd component_block(const Partition& partition, const ParamPoint& point, int k) {
  check_size(partition, point);
  const WeightedGraph& g = partition.graph();
  const auto verts = partition.component(k);
  const auto m = static_cast<Eigen::Index>(verts.size());
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    const int v = verts[a];
    for (const Incidence& inc : g.neighbors(v)) {
      const double w = g.edge(inc.edge).w;
      const int pos = partition.boundary_position(inc.edge);
      if (pos < 0) {
        block(a, a) += w;
        block(a, partition.local_index(inc.vertex)) -= w;
      } else {
        const double alpha = point.alpha[pos];
        if (alpha == 0.0) throw Error(ErrorKind::ZeroAlpha, "edge parameter must be nonzero");
        const bool low_end = v < inc.vertex;
        block(a, a) += w * (1.0 + (low_end ? alpha : 1.0 / alpha));
      }
    }
  }
  return block;
}

Eigen::VectorXd ComponentGroundState::extended(const Partition& partition) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(partition.graph().vertex_count());
  const auto verts = partition.component(component);
  for (std::size_t a = 0; a < verts.size(); ++a) out[verts[a]] = f[static_cast<Eigen::Index>(a)];
  return out;
}

std::vector<ComponentGroundState> ground_states(const Partition& partition,
                                                const ParamPoint& point) {
  check_size(partition, point);
  check_positive(point);
  std::vector<ComponentGroundState> out(partition.size());
  for (int k = 0; k < partition.size(); ++k) {
    const Eigen::MatrixXd block = component_block(partition, point, k);
    ComponentGroundState& s = out[k];
    s.component = k;
    if (block.rows() == 1) {
      s.eigenvalue = block(0, 0);
      s.f = Eigen::VectorXd::Ones(1);
      s.block_gap = std::numeric_limits<double>::infinity();
      continue;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorKind::ConvergenceFailure, "block eigensolver did not converge");
    }
    s.eigenvalue = solver.eigenvalues()[0];
    s.f = solver.eigenvectors().col(0);
    if (s.f.sum() < 0) s.f = -s.f;
    s.block_gap = solver.eigenvalues()[1] - solver.eigenvalues()[0];
  }
  return out;
}

Eigen::VectorXd phi(const Partition& partition, const ParamPoint& point) {
  const auto states = ground_states(partition, point);
  Eigen::VectorXd p(partition.size());
  for (int k = 0; k < partition.size(); ++k) p[k] = states[k].eigenvalue;
  return p;
}

double energy(const Partition& partition, const ParamPoint& point) {
  return phi(partition, point).maxCoeff();
}

bool is_equipartition(const Partition& partition, const ParamPoint& point, double eq_tol) {
  return equal_enough(phi(partition, point), eq_tol);
}

Eigen::MatrixXd phi_jacobian(const Partition& partition, const ParamPoint& point,
                             const std::vector<ComponentGroundState>& states) {
  const auto boundary = partition.boundary();
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(partition.size(), static_cast<Eigen::Index>(boundary.size()));
  for (std::size_t b = 0; b < boundary.size(); ++b) {
    const Edge& e = partition.graph().edge(boundary[b]);
    const int ki = partition.component_of(e.i);
    const int kj = partition.component_of(e.j);
    const double fi = states[ki].f[partition.local_index(e.i)];
    const double fj = states[kj].f[partition.local_index(e.j)];
    const double a = point.alpha[b];
    jac(ki, static_cast<Eigen::Index>(b)) += e.w * fi * fi;
    jac(kj, static_cast<Eigen::Index>(b)) -= e.w * fj * fj / (a * a);
  }
  return jac;
}

Eigen::MatrixXd phi_jacobian(const Partition& partition, const ParamPoint& point,
                             double gap_rel) {
  const auto states = ground_states(partition, point);
  for (const auto& s : states) {
    if (!(s.block_gap > gap_rel * std::max(1.0, std::abs(s.eigenvalue)))) {
      throw Error(ErrorKind::DegenerateBlock,
                  "ground state of component " + std::to_string(s.component) + " is not simple");
    }
  }
  return phi_jacobian(partition, point, states);
}

ParamPoint alpha_from_eigenvector(const Partition& partition, const Eigen::VectorXd& psi,
                                  const Tolerances& tol) {
  const WeightedGraph& g = partition.graph();
  if (psi.size() != g.vertex_count()) {
    throw Error(ErrorKind::InvalidInput, "vector length does not match vertex count");
  }
  const double peak = psi.cwiseAbs().maxCoeff();
  if (!(peak > 0.0)) throw Error(ErrorKind::AllZeroVector, "vector is identically zero");
  if (psi.cwiseAbs().minCoeff() <= tol.zero_tol * peak) {
    throw Error(ErrorKind::DegenerateEigenvector, "eigenvector has a zero entry");
  }

  // Relative to σ^∂P the nodal partition is P exactly when ψ has one sign.
  const Eigen::VectorXd v = psi.sum() < 0 ? Eigen::VectorXd(-psi) : psi;
  if (v.minCoeff() < 0) {
    throw Error(ErrorKind::WrongNodalPartition,
                "eigenvector changes sign relative to the partition signature");
  }
  const Signature sigma = Signature::from_partition(partition);
  const SymOperator op = signed_laplacian(sigma);
  const double lambda = v.dot(op * v) / v.squaredNorm();
  const double residual = (op * v - lambda * v).norm() / v.norm();
  const double scale = std::max(1.0, op.cwiseAbs().maxCoeff());
  if (residual > 1e-8 * scale) {
    throw Error(ErrorKind::InvalidInput, "vector is not an eigenvector of the partition Laplacian");
  }
  const SpectrumReport spec = eigendecompose(op);
  int nearest = 1;
  for (int n = 1; n <= spec.size(); ++n) {
    if (std::abs(spec.value(n) - lambda) < std::abs(spec.value(nearest) - lambda)) nearest = n;
  }
  if (!spec.is_simple(nearest, tol.gap_rel)) {
    throw Error(ErrorKind::DegenerateEigenvector, "eigenvalue is not simple");
  }

  ParamPoint point;
  for (int e : partition.boundary()) {
    const Edge& ed = g.edge(e);
    point.alpha.push_back(v[ed.j] / v[ed.i]);
  }
  return point;
}

Eigen::MatrixXd off_diagonal_projector(int nu) {
  return Eigen::MatrixXd::Identity(nu, nu) - Eigen::MatrixXd::Constant(nu, nu, 1.0 / nu);
}

ParamPoint shift_log(const ParamPoint& point, const Eigen::VectorXd& dbeta) {
  return ParamPoint::from_vector(point.as_vector().array() * dbeta.array().exp());
}

namespace {

Eigen::VectorXd phi_of(const std::vector<ComponentGroundState>& states) {
  Eigen::VectorXd p(static_cast<Eigen::Index>(states.size()));
  for (std::size_t k = 0; k < states.size(); ++k) p[k] = states[k].eigenvalue;
  return p;
}

// Q dΦ diag(α): the projected Jacobian in log coordinates.
Eigen::MatrixXd log_jacobian(const Partition& partition, const ParamPoint& point,
                             const std::vector<ComponentGroundState>& states) {
  return off_diagonal_projector(partition.size()) * phi_jacobian(partition, point, states) *
         point.as_vector().asDiagonal();
}

constexpr double kLogLimit = 27.631021115928547;  // log(1e12)

}  // namespace

ParamPoint solve_equipartition(const Partition& partition, const ParamPoint& start,
                               const SolveOptions& opts) {
  check_size(partition, start);
  check_positive(start);
  if (partition.size() == 1) return start;

  ParamPoint alpha = start;
  auto states = ground_states(partition, alpha);
  Eigen::VectorXd p = phi_of(states);

  for (int it = 0; it < opts.max_iter; ++it) {
    if (equal_enough(p, opts.eq_tol)) return alpha;
    const Eigen::VectorXd r = centered(p);
    const Eigen::VectorXd step = log_jacobian(partition, alpha, states)
                                     .jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV)
                                     .solve(-r);
    const Eigen::VectorXd beta = alpha.as_vector().array().log();

    const double rnorm = r.norm();
    double t = 1.0;
    bool accepted = false;
    bool blocked = false;
    while (t > 1e-12) {
      const Eigen::VectorXd trial_beta = beta + t * step;
      if (trial_beta.cwiseAbs().maxCoeff() > kLogLimit) {
        blocked = true;
        t *= 0.5;
        continue;
      }
      const ParamPoint tp = ParamPoint::from_vector(trial_beta.array().exp());
      auto trial_states = ground_states(partition, tp);
      Eigen::VectorXd tphi = phi_of(trial_states);
      if (centered(tphi).norm() < (1.0 - 1e-4 * t) * rnorm) {
        alpha = tp;
        states = std::move(trial_states);
        p = std::move(tphi);
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (equal_enough(p, 10 * opts.eq_tol)) return alpha;
      if (blocked) {
        throw Error(ErrorKind::LeftPositiveOrthant,
                    "Newton path drives boundary parameters toward 0 or infinity");
      }
      throw Error(ErrorKind::NoConvergence, "line search stalled before reaching an equipartition");
    }
  }
  if (equal_enough(p, opts.eq_tol)) return alpha;
  throw Error(ErrorKind::NoConvergence,
              "no equipartition after " + std::to_string(opts.max_iter) + " iterations");
}

ManifoldFrame manifold_frame(const Partition& partition, const ParamPoint& point) {
  check_size(partition, point);
  const Eigen::Index b = static_cast<Eigen::Index>(point.alpha.size());
  ManifoldFrame frame;
  if (b == 0) {
    frame.tangent = Eigen::MatrixXd(0, 0);
    frame.normal = Eigen::MatrixXd(0, 0);
    return frame;
  }
  const Eigen::MatrixXd qj =
      off_diagonal_projector(partition.size()) * phi_jacobian(partition, point) *
      point.as_vector().asDiagonal();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(qj, Eigen::ComputeFullV);
  frame.singular_values = svd.singularValues();
  const double top = frame.singular_values.size() ? frame.singular_values[0] : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < frame.singular_values.size(); ++k) {
    if (frame.singular_values[k] > 1e-10 * std::max(top, 1e-300)) ++rank;
  }
  frame.normal = svd.matrixV().leftCols(rank);
  frame.tangent = svd.matrixV().rightCols(b - rank);
  return frame;
}

ParamPoint retract(const Partition& partition, const ParamPoint& point,
                   const Eigen::MatrixXd& normal, double eq_tol, int max_iter) {
  check_size(partition, point);
  check_positive(point);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(normal.cols());
  ParamPoint here = point;
  auto states = ground_states(partition, here);
  Eigen::VectorXd p = phi_of(states);
  for (int it = 0; it < max_iter; ++it) {
    if (equal_enough(p, eq_tol)) return here;
    if (normal.cols() == 0) break;
    const Eigen::MatrixXd jn = log_jacobian(partition, here, states) * normal;
    const Eigen::VectorXd ds =
        jn.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(-centered(p));
    // Halve until the residual drops; a full Newton step is taken near the manifold.
    const double rnorm = centered(p).norm();
    double t = 1.0;
    bool accepted = false;
    while (t > 1e-6) {
      const Eigen::VectorXd trial_s = s + t * ds;
      const ParamPoint tp = shift_log(point, normal * trial_s);
      auto trial_states = ground_states(partition, tp);
      Eigen::VectorXd tphi = phi_of(trial_states);
      if (centered(tphi).norm() < rnorm) {
        s = trial_s;
        here = tp;
        states = std::move(trial_states);
        p = std::move(tphi);
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
  }
  if (equal_enough(p, eq_tol)) return here;
  throw Error(ErrorKind::RetractionFailure, "could not return to the equipartition manifold");
}

}  // namespace spl
