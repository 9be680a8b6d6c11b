#include "spl/critical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spl/error.hpp"

namespace spl {

namespace {

int nearest_index(const SpectrumReport& spec, double lambda) {
  int best = 1;
  for (int n = 2; n <= spec.size(); ++n) {
    if (std::abs(spec.value(n) - lambda) < std::abs(spec.value(best) - lambda)) best = n;
  }
  return best;
}

Eigen::VectorXd one_signed(const Eigen::VectorXd& v) {
  return v.sum() < 0 ? Eigen::VectorXd(-v) : v;
}

void add_perturbation(SymOperator& op, const Edge& e, double alpha, double scale) {
  const Eigen::Matrix2d b = scale * e.w * edge_perturbation(alpha);
  op(e.i, e.i) += b(0, 0);
  op(e.i, e.j) += b(0, 1);
  op(e.j, e.i) += b(1, 0);
  op(e.j, e.j) += b(1, 1);
}

struct CurveSample {
  double lambda = 0.0;
  Eigen::VectorXd psi;
  bool simple = false;
  double slope = 0.0;
};

CurveSample sample_curve(const SymOperator& base, const Edge& edge, int m, double alpha,
                         const Tolerances& tol) {
  SymOperator op = base;
  add_perturbation(op, edge, alpha, 1.0);
  const SpectrumReport spec = eigendecompose(op);
  CurveSample s;
  s.lambda = spec.value(m);
  s.psi = spec.vector(m);
  s.simple = spec.is_simple(m, tol.gap_rel);
  const double pi = s.psi[edge.i];
  const double pj = s.psi[edge.j];
  s.slope = edge.w * (pi * pi - pj * pj / (alpha * alpha));
  return s;
}

}  // namespace

double projected_gradient(const Partition& partition, const ParamPoint& point) {
  if (partition.boundary().empty()) return 0.0;
  const ManifoldFrame frame = manifold_frame(partition, point);
  if (frame.tangent.cols() == 0) return 0.0;
  const Eigen::MatrixXd jac = phi_jacobian(partition, point);
  // Gradient of mean Φ in log coordinates.
  const Eigen::VectorXd grad =
      point.as_vector().cwiseProduct(jac.colwise().mean().transpose());
  return (frame.tangent.transpose() * grad).norm();
}

CriticalScan scan_critical_points(const Partition& partition, const Tolerances& tol) {
  const SymOperator op = partition_laplacian(partition);
  const SpectrumReport spec = eigendecompose(op);
  CriticalScan scan;
  for (int n = 1; n <= spec.size(); ++n) {
    EigenvectorScreen screen;
    screen.eigen_index = n;
    screen.nondegenerate = is_nondegenerate(spec, n, tol.zero_tol, tol.gap_rel);
    const Eigen::VectorXd psi = one_signed(spec.vector(n));
    screen.positive = psi.minCoeff() > tol.zero_tol * psi.cwiseAbs().maxCoeff();
    if (screen.nondegenerate && screen.positive) {
      CriticalPoint cp;
      cp.alpha = alpha_from_eigenvector(partition, psi, tol);
      cp.psi = psi / psi.norm();
      cp.eigen_index = n;
      cp.energy = spec.value(n);
      cp.nu = partition.size();
      cp.deficiency = n - partition.size();
      const Eigen::VectorXd p = phi(partition, cp.alpha);
      const double scale = std::max(1.0, std::abs(cp.energy));
      const bool equi = (p.maxCoeff() - p.minCoeff()) <= tol.eq_tol * scale * 10 &&
                        std::abs(p.maxCoeff() - cp.energy) <= 1e-9 * scale;
      if (equi) {
        cp.projected_gradient = projected_gradient(partition, cp.alpha);
        if (cp.projected_gradient <= 1e-7) {
          try {
            cp.certificate = lagrange_certificate(partition, cp);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::CertificateFailure) throw;
          }
          screen.claimed = true;
          scan.points.push_back(std::move(cp));
        }
      }
    }
    scan.screens.push_back(screen);
  }
  return scan;
}

std::vector<CriticalPoint> critical_points_from_spectrum(const Partition& partition,
                                                         const Tolerances& tol) {
  return scan_critical_points(partition, tol).points;
}

Eigen::VectorXd eigenvector_from_certificate(const Partition& partition, const ParamPoint& point,
                                             const std::vector<double>& c) {
  if (static_cast<int>(c.size()) != partition.size()) {
    throw Error(ErrorKind::InvalidInput, "certificate must have one weight per component");
  }
  const auto states = ground_states(partition, point);
  Eigen::VectorXd psi = Eigen::VectorXd::Zero(partition.graph().vertex_count());
  for (int k = 0; k < partition.size(); ++k) {
    psi += std::sqrt(std::max(c[k], 0.0)) * states[k].extended(partition);
  }
  return psi;
}

std::vector<double> lagrange_certificate(const Partition& partition, const CriticalPoint& point,
                                         double tol) {
  const Eigen::VectorXd psi = point.psi / point.psi.norm();
  std::vector<double> c(partition.size(), 0.0);
  for (int v = 0; v < partition.graph().vertex_count(); ++v) {
    c[partition.component_of(v)] += psi[v] * psi[v];
  }
  for (double ck : c) {
    if (!(ck > 0.0)) throw Error(ErrorKind::CertificateFailure, "a component carries no mass");
  }

  const auto states = ground_states(partition, point.alpha);
  const auto boundary = partition.boundary();
  for (std::size_t b = 0; b < boundary.size(); ++b) {
    const Edge& e = partition.graph().edge(boundary[b]);
    const int ki = partition.component_of(e.i);
    const int kj = partition.component_of(e.j);
    const double fi = states[ki].f[partition.local_index(e.i)];
    const double fj = states[kj].f[partition.local_index(e.j)];
    const double a = point.alpha.alpha[b];
    const double stationarity = c[ki] * fi * fi - c[kj] * fj * fj / (a * a);
    if (std::abs(stationarity) > tol) {
      throw Error(ErrorKind::CertificateFailure,
                  "stationarity fails on boundary edge (" + std::to_string(e.i) + "," +
                      std::to_string(e.j) + ")");
    }
  }
  const Eigen::VectorXd rebuilt = eigenvector_from_certificate(partition, point.alpha, c);
  if ((rebuilt - psi).norm() > tol) {
    throw Error(ErrorKind::CertificateFailure, "certificate does not reconstruct the eigenvector");
  }
  return c;
}

std::optional<std::vector<double>> certificate_from_jacobian(const Partition& partition,
                                                             const ParamPoint& point) {
  const int nu = partition.size();
  if (nu == 1) return std::vector<double>{1.0};
  const Eigen::MatrixXd jt = phi_jacobian(partition, point).transpose();
  // Square up so the SVD always exposes ν right singular vectors.
  Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(std::max<Eigen::Index>(jt.rows(), nu), nu);
  padded.topRows(jt.rows()) = jt;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(padded, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double top = std::max(sv[0], 1e-300);
  if (sv[nu - 1] > 1e-7 * top) return std::nullopt;
  if (nu >= 2 && sv[nu - 2] <= 1e-7 * top) return std::nullopt;
  Eigen::VectorXd c = svd.matrixV().col(nu - 1);
  if (c.sum() < 0) c = -c;
  if (c.minCoeff() <= 0.0) return std::nullopt;
  c /= c.sum();
  return std::vector<double>(c.data(), c.data() + nu);
}

MorseResult morse_index(const Partition& partition, const CriticalPoint& point,
                        const Tolerances& tol) {
  if (betti_number(partition) == 0) {
    throw Error(ErrorKind::InvalidInput,
                "tree partition: the equipartition manifold is a single point");
  }
  const ManifoldFrame frame = manifold_frame(partition, point.alpha);
  const Eigen::MatrixXd& tangent = frame.tangent;
  const Eigen::Index d = tangent.cols();
  MorseResult out;
  out.tangent_dimension = static_cast<int>(d);
  if (d == 0) {
    throw Error(ErrorKind::InvalidInput, "equipartition manifold has no tangent directions here");
  }
  // On the manifold E = Σ c_k φ_k exactly, with c the eigenvector mass per
  // component, and Σ c_k ∇φ_k = 0 at the critical point. So the constrained
  // Hessian is Tᵀ (Σ c_k ∇²φ_k) T with no curvature term from the constraints.
  // ∇²φ_k comes from central differences of the analytic Jacobian in log
  // coordinates; the index does not depend on the coordinates.
  const Eigen::VectorXd psi = point.psi / point.psi.norm();
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(partition.size());
  for (int v = 0; v < partition.graph().vertex_count(); ++v) {
    mass[partition.component_of(v)] += psi[v] * psi[v];
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(point.alpha.alpha.size());
  auto weighted_gradient = [&](const Eigen::VectorXd& dbeta) -> Eigen::VectorXd {
    const ParamPoint at = shift_log(point.alpha, dbeta);
    return (phi_jacobian(partition, at) * at.as_vector().asDiagonal()).transpose() * mass;
  };

  auto hessian = [&](double h) {
    Eigen::MatrixXd full(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
      Eigen::VectorXd step = Eigen::VectorXd::Zero(dim);
      step[b] = h;
      full.col(b) = (weighted_gradient(step) - weighted_gradient(-step)) / (2 * h);
    }
    const Eigen::MatrixXd sym = 0.5 * (full + full.transpose());
    return Eigen::MatrixXd(tangent.transpose() * sym * tangent);
  };

  const double h = 1e-4;
  const Eigen::MatrixXd coarse = hessian(h);
  const Eigen::MatrixXd fine = hessian(h / 2);
  const Eigen::MatrixXd extrapolated = (4.0 * fine - coarse) / 3.0;

  auto count_negative = [](const Eigen::VectorXd& ev, double cut) {
    int k = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) k += ev[i] < -cut;
    return k;
  };

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(extrapolated);
  const Eigen::VectorXd ev = solver.eigenvalues();
  const double hess_tol = tol.hess_rel * ev.cwiseAbs().maxCoeff();
  out.hessian_eigenvalues.assign(ev.data(), ev.data() + ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) <= hess_tol || ev.cwiseAbs().maxCoeff() == 0.0) {
      throw Error(ErrorKind::DegenerateHessian, "constrained Hessian is singular");
    }
  }
  out.index = count_negative(ev, hess_tol);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> coarse_solver(coarse);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> fine_solver(fine);
  if (count_negative(coarse_solver.eigenvalues(), hess_tol) != out.index ||
      count_negative(fine_solver.eigenvalues(), hess_tol) != out.index) {
    throw Error(ErrorKind::DegenerateHessian,
                "Hessian signature changes between step h and h/2");
  }
  return out;
}

CurveExtremum classify_curve_critical(const SymOperator& base, const Edge& edge, int m,
                                      double alpha) {
  const double h = std::min(1e-4 * (1.0 + std::abs(alpha)), std::abs(alpha) / 2);
  const Tolerances tol;
  const double up = sample_curve(base, edge, m, alpha + h, tol).slope;
  const double down = sample_curve(base, edge, m, alpha - h, tol).slope;
  // up - down ≈ 2h λ''; below ~1e-9 the sign is noise.
  if (std::abs(up - down) < 1e-9) {
    throw Error(ErrorKind::ClassificationAmbiguous,
                "second derivative of the edge curve is indistinguishable from zero");
  }
  return up < down ? CurveExtremum::Max : CurveExtremum::Min;
}

EdgeCurve edge_curve_operator(const SymOperator& base, const Edge& edge, int edge_id, int m,
                              std::vector<double> grid, const Tolerances& tol) {
  if (m < 1 || m > base.rows()) {
    throw Error(ErrorKind::InvalidInput, "eigen-index " + std::to_string(m) + " out of range");
  }
  if (grid.size() < 2) throw Error(ErrorKind::InvalidInput, "grid needs at least two points");
  std::sort(grid.begin(), grid.end());
  for (double a : grid) {
    if (a == 0.0 || !std::isfinite(a)) {
      throw Error(ErrorKind::ZeroAlpha, "grid must avoid zero");
    }
  }

  EdgeCurve curve;
  curve.edge = edge_id;
  curve.m = m;
  curve.grid = grid;
  std::vector<CurveSample> samples;
  for (double a : grid) {
    samples.push_back(sample_curve(base, edge, m, a, tol));
    curve.values.push_back(samples.back().lambda);
    curve.simple.push_back(samples.back().simple ? 1 : 0);
  }

  const SpectrumReport base_spec = eigendecompose(base);
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    if (grid[k] * grid[k + 1] < 0) continue;
    if (!samples[k].simple || !samples[k + 1].simple) {
      curve.flagged_segments.push_back(static_cast<int>(k));
      continue;
    }
    const bool neg_lo = samples[k].slope < 0;
    const bool neg_hi = samples[k + 1].slope < 0;
    if (neg_lo == neg_hi) continue;

    double lo = grid[k];
    double hi = grid[k + 1];
    CurveSample mid_sample = samples[k];
    // Bisect to full precision: near small |α| the residual scales like 1/|α|.
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      mid_sample = sample_curve(base, edge, m, mid, tol);
      if (!mid_sample.simple) {
        throw Error(ErrorKind::DegenerateSegment, "eigenvalue loses simplicity inside a bracket");
      }
      if ((mid_sample.slope < 0) == neg_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    CurveCritical cc;
    cc.alpha = 0.5 * (lo + hi);
    mid_sample = sample_curve(base, edge, m, cc.alpha, tol);
    cc.eigenvalue = mid_sample.lambda;
    cc.psi = mid_sample.psi;
    cc.kind = neg_hi ? CurveExtremum::Max : CurveExtremum::Min;
    const double pi = mid_sample.psi[edge.i];
    const double pj = mid_sample.psi[edge.j];
    cc.positive_branch = cc.alpha * pi * pj > 0;
    const double branch = (cc.positive_branch ? 1.0 : -1.0) * pj / pi;
    cc.branch_residual = std::abs(cc.alpha - branch) / std::abs(cc.alpha);
    if (cc.positive_branch) {
      const int n = nearest_index(base_spec, cc.eigenvalue);
      cc.base_index = n;
      cc.index_shift = n - m;
      cc.max_flag = cc.kind == CurveExtremum::Max ? 1 : 0;
    }
    curve.criticals.push_back(cc);
  }
  return curve;
}

EdgeCurve edge_curve(const Signature& sigma, int edge, int m, std::vector<double> grid,
                     const Tolerances& tol) {
  if (edge < 0 || edge >= sigma.graph().edge_count()) {
    throw Error(ErrorKind::InvalidInput, "edge id out of range");
  }
  if (!sigma.is_negative(edge)) {
    throw Error(ErrorKind::InvalidInput,
                "edge must be negative so that its coupling cancels against the perturbation");
  }
  return edge_curve_operator(signed_laplacian(sigma), sigma.graph().edge(edge), edge, m,
                             std::move(grid), tol);
}

RestorationReport deficiency_via_edge_restoration(const Partition& partition,
                                                  const CriticalPoint& point) {
  RestorationReport report;
  report.actual_index = point.eigen_index;
  const int nu = partition.size();

  // Union-find over components; non-tree boundary edges form R.
  std::vector<int> parent(nu);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto boundary = partition.boundary();
  std::vector<int> removed_pos;
  for (std::size_t b = 0; b < boundary.size(); ++b) {
    const Edge& e = partition.graph().edge(boundary[b]);
    const int a = find(partition.component_of(e.i));
    const int c = find(partition.component_of(e.j));
    if (a == c) {
      report.removed_edges.push_back(boundary[b]);
      removed_pos.push_back(static_cast<int>(b));
    } else {
      parent[a] = c;
    }
  }

  SymOperator current = partition_laplacian(partition);
  for (int pos : removed_pos) {
    add_perturbation(current, partition.graph().edge(boundary[pos]), point.alpha.alpha[pos], 1.0);
  }
  report.tree_index = nearest_index(eigendecompose(current), point.energy);
  int total = 0;
  for (std::size_t r = 0; r < removed_pos.size(); ++r) {
    const int pos = removed_pos[r];
    const Edge& e = partition.graph().edge(boundary[pos]);
    const double a = point.alpha.alpha[pos];
    RestorationStep step;
    step.edge = boundary[pos];
    step.alpha = a;
    step.index_before = nearest_index(eigendecompose(current), point.energy);
    SymOperator restored = current;
    add_perturbation(restored, e, a, -1.0);
    step.kind = classify_curve_critical(restored, e, step.index_before, a);
    step.max_flag = step.kind == CurveExtremum::Max ? 1 : 0;
    total += step.max_flag;
    report.steps.push_back(step);
    current = std::move(restored);
  }
  report.predicted_index = nu + total;
  return report;
}

}  // namespace spl
