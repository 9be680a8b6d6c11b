#include "spl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <map>

#include "spl/bounds.hpp"
#include "spl/critical.hpp"
#include "spl/error.hpp"
#include "spl/ghost.hpp"
#include "spl/kernels.hpp"
#include "spl/random.hpp"

namespace spl {

namespace {

struct Ctx {
  int instance;
  SplitMix64 rng;
  const SuiteOptions& opts;
  std::vector<CheckRecord> out;

  void record(const std::string& check, bool ok, Json detail = Json::object()) {
    out.push_back({instance, check, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  }
  void skip(const std::string& check, Json detail = Json::object()) {
    out.push_back({instance, check, CheckStatus::Skip, std::move(detail)});
  }
  int between(int lo, int hi) { return lo + rng.below(hi - lo + 1); }
  WeightedGraph graph(int lo, int hi, double p = 0.5) {
    WeightedGraph g = random_graph(rng, between(lo, hi), p);
    if (opts.jitter > 0) g = jitter_weights(rng, g, opts.jitter);
    return g;
  }
};

using Vec = Eigen::VectorXd;

Signature with_negative_edge(const Signature& sigma, int edge) {
  std::vector<int> neg(sigma.negative_edges().begin(), sigma.negative_edges().end());
  neg.push_back(edge);
  return Signature(sigma.graph(), std::move(neg));
}

SymOperator perturb(const SymOperator& base, const Edge& e, double alpha) {
  SymOperator op = base;
  const Eigen::Matrix2d b = e.w * edge_perturbation(alpha);
  op(e.i, e.i) += b(0, 0);
  op(e.i, e.j) += b(0, 1);
  op(e.j, e.i) += b(1, 0);
  op(e.j, e.j) += b(1, 1);
  return op;
}

// ---------------------------------------------------------------- courant

void suite_courant(Ctx& c) {
  const WeightedGraph g = c.graph(3, 10);
  const Signature sigma = random_signature(c.rng, g);
  try {
    const auto rows = courant_check(sigma, c.opts.tol);
    int worst = 0;
    for (const auto& r : rows) worst = std::min(worst, r.deficiency);
    c.record("courant-bound", true,
             {{"vertices", g.vertex_count()}, {"rows", rows.size()}, {"min_deficiency", worst}});
  } catch (const Error& e) {
    c.record("courant-bound", false, {{"error", e.what()}});
  }

  const SwitchingFunction tau = random_switching(c.rng, g.vertex_count());
  const Signature switched = switch_signature(sigma, tau);
  const SpectrumReport spec = eigendecompose(signed_laplacian(sigma));
  Vec t(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) t[v] = tau.tau[v];
  bool same = true;
  int compared = 0;
  for (int n = 1; n <= spec.size(); ++n) {
    if (!is_nondegenerate(spec, n, c.opts.tol.zero_tol, c.opts.tol.gap_rel)) continue;
    const Vec psi = spec.vector(n);
    const NodalReport a = nodal_report(sigma, psi, n, c.opts.tol.zero_tol);
    const NodalReport b = nodal_report(switched, t.cwiseProduct(psi), n, c.opts.tol.zero_tol);
    same = same && a.domain_of == b.domain_of && a.nodal_edges == b.nodal_edges;
    ++compared;
  }
  c.record("switching-invariance", same, {{"eigenvectors", compared}});

  if (is_balanced(sigma) && is_nondegenerate(spec, 1, c.opts.tol.zero_tol, c.opts.tol.gap_rel)) {
    const NodalReport ground = nodal_report(sigma, spec.vector(1), 1, c.opts.tol.zero_tol);
    c.record("balanced-ground-state", ground.domain_count == 1,
             {{"domains", ground.domain_count}});
  }
}

// ------------------------------------------------------------ interlacing

void suite_interlacing(Ctx& c) {
  const WeightedGraph g = c.graph(3, 10);
  const int e = c.rng.below(g.edge_count());
  const Signature sigma = with_negative_edge(random_signature(c.rng, g), e);
  const double mag = std::exp(c.rng.uniform(-2.0, 2.0));
  const double alpha = c.rng.coin() ? mag : -mag;
  const SymOperator base = signed_laplacian(sigma);
  const auto lo = eigendecompose(base).eigenvalues;
  const auto hi = eigendecompose(perturb(base, g.edge(e), alpha)).eigenvalues;
  const int n = static_cast<int>(lo.size());
  double slack = std::numeric_limits<double>::infinity();
  for (int m = 0; m < n; ++m) {
    if (alpha > 0) {
      slack = std::min(slack, hi[m] - lo[m]);
      if (m + 1 < n) slack = std::min(slack, lo[m + 1] - hi[m]);
    } else {
      slack = std::min(slack, lo[m] - hi[m]);
      if (m > 0) slack = std::min(slack, hi[m] - lo[m - 1]);
    }
  }
  c.record("weyl-interlacing", slack >= -1e-9,
           {{"vertices", n}, {"alpha", alpha}, {"min_slack", slack}});
}

// ------------------------------------------------------------------ shift

void suite_shift(Ctx& c) {
  const WeightedGraph g = c.graph(3, 8);
  const int e = c.rng.below(g.edge_count());
  const Signature sigma = with_negative_edge(random_signature(c.rng, g), e);
  const SymOperator base = signed_laplacian(sigma);

  std::vector<double> grid;
  for (int k = 0; k < 120; ++k) {
    const double a = std::pow(10.0, -3.0 + 6.0 * k / 119.0);
    grid.push_back(a);
    grid.push_back(-a);
  }
  for (int m = 1; m <= g.vertex_count(); ++m) {
    EdgeCurve curve;
    try {
      curve = edge_curve(sigma, e, m, grid, c.opts.tol);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::DegenerateSegment) {
        c.skip("curve", {{"m", m}, {"reason", err.what()}});
        continue;
      }
      throw;
    }
    for (const CurveCritical& cc : curve.criticals) {
      c.record("branch-residual", cc.branch_residual <= 1e-6,
               {{"m", m}, {"alpha", cc.alpha}, {"residual", cc.branch_residual}});
      if (!cc.positive_branch) continue;
      const Vec psi = cc.psi;
      const double residual = (base * psi - cc.eigenvalue * psi).norm();
      const int n = *cc.base_index;
      c.record("base-eigenvector", residual <= 1e-8 && std::abs(n - m) <= 1,
               {{"m", m}, {"n", n}, {"residual", residual}});
      const int expected = cc.alpha > 0 ? 0 : 1;
      c.record("spectral-shift", *cc.max_flag - *cc.index_shift == expected,
               {{"m", m},
                {"alpha", cc.alpha},
                {"M", *cc.max_flag},
                {"delta_m", *cc.index_shift}});
    }
  }
}

// --------------------------------------------------------- correspondence

void suite_correspondence(Ctx& c) {
  const WeightedGraph g = c.graph(3, 8);
  const int nu = c.between(2, std::min(4, g.vertex_count()));
  const Partition p = random_partition(c.rng, g, nu);
  const Tolerances& tol = c.opts.tol;

  // Eigenvector to equipartition, and the criticality it must carry.
  const SpectrumReport spec = eigendecompose(partition_laplacian(p));
  const CriticalScan scan = scan_critical_points(p, tol);
  for (const EigenvectorScreen& s : scan.screens) {
    if (!s.nondegenerate || !s.positive) continue;
    Vec psi = spec.vector(s.eigen_index);
    if (psi.sum() < 0) psi = -psi;
    const ParamPoint a = alpha_from_eigenvector(p, psi, tol);
    const Vec f = phi(p, a);
    const double big = f.maxCoeff();
    const double spread = big - f.minCoeff();
    const double lam = spec.value(s.eigen_index);
    c.record("equipartition-from-eigenvector",
             spread <= 1e-9 * big && std::abs(big - lam) <= 1e-9 * std::max(1.0, big),
             {{"index", s.eigen_index}, {"spread", spread}, {"energy", big}, {"eigenvalue", lam}});
    c.record("eigenvector-is-critical", s.claimed, {{"index", s.eigen_index}});
  }

  // Both directions of the certificate.
  for (const CriticalPoint& cp : scan.points) {
    bool reverse = true;
    try {
      lagrange_certificate(p, cp);
    } catch (const Error&) {
      reverse = false;
    }
    const auto cert = certificate_from_jacobian(p, cp.alpha);
    double rebuild = std::numeric_limits<double>::infinity();
    if (cert) rebuild = (eigenvector_from_certificate(p, cp.alpha, *cert) - cp.psi).norm();
    c.record("lagrange-certificate", reverse && rebuild <= 1e-8,
             {{"index", cp.eigen_index}, {"reconstruction_error", rebuild}});
  }

  // Transversality at critical points and at solved equipartitions.
  std::vector<ParamPoint> points;
  for (const CriticalPoint& cp : scan.points) points.push_back(cp.alpha);
  for (int s = 0; s < 3; ++s) {
    ParamPoint start;
    for (std::size_t k = 0; k < p.boundary().size(); ++k) {
      start.alpha.push_back(std::exp(c.rng.uniform(-1.0, 1.0)));
    }
    try {
      points.push_back(solve_equipartition(p, start));
    } catch (const Error&) {
      // No equipartition reached from here.
    }
  }
  for (const ParamPoint& a : points) {
    Eigen::MatrixXd jac;
    try {
      jac = phi_jacobian(p, a, tol.gap_rel);
    } catch (const Error&) {
      c.skip("transversality", {{"reason", "degenerate block"}});
      continue;
    }
    Eigen::MatrixXd aug(nu, jac.cols() + 1);
    aug.col(0).setOnes();
    aug.rightCols(jac.cols()) = jac;
    const Vec sv = aug.jacobiSvd().singularValues();
    const bool full_rank = sv.size() >= nu && sv[nu - 1] > 1e-8 * sv[0];

    Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(std::max<Eigen::Index>(jac.cols(), nu), nu);
    padded.topRows(jac.cols()) = jac.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(padded, Eigen::ComputeFullV);
    const Vec jsv = svd.singularValues();
    int kernel = 0;
    for (int k = 0; k < nu; ++k) kernel += jsv[k] <= 1e-8 * std::max(jsv[0], 1e-300);
    bool single_signed = kernel <= 1;
    if (kernel == 1) {
      const Vec u = svd.matrixV().col(nu - 1);
      single_signed = (u.array() > 0).all() || (u.array() < 0).all();
    }
    c.record("transversality", full_rank && single_signed,
             {{"min_singular_value", sv[nu - 1]}, {"kernel_dimension", kernel}});
  }

  // Analytic Jacobian against central differences at a random point.
  ParamPoint a;
  for (std::size_t k = 0; k < p.boundary().size(); ++k) {
    a.alpha.push_back(std::exp(c.rng.uniform(-1.0, 1.0)));
  }
  try {
    const Eigen::MatrixXd jac = phi_jacobian(p, a, tol.gap_rel);
    Eigen::MatrixXd fd(jac.rows(), jac.cols());
    for (Eigen::Index b = 0; b < jac.cols(); ++b) {
      const double h = 1e-6 * a.alpha[b];
      ParamPoint up = a, down = a;
      up.alpha[b] += h;
      down.alpha[b] -= h;
      fd.col(b) = (phi(p, up) - phi(p, down)) / (2 * h);
    }
    const double err = (fd - jac).cwiseAbs().maxCoeff();
    const double scale = jac.cwiseAbs().maxCoeff();
    c.record("jacobian-finite-difference", err <= 1e-5 * scale,
             {{"max_error", err}, {"scale", scale}});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateBlock) throw;
    c.skip("jacobian-finite-difference", {{"reason", "degenerate block"}});
  }
}

// ------------------------------------------------------------------ morse

void suite_morse(Ctx& c) {
  const WeightedGraph g = c.graph(4, 8);
  const int nu = c.between(2, 3);
  std::vector<Partition> cyclic;
  for_each_partition(
      g, nu,
      [&](const Partition& p) {
        if (betti_number(p) >= 1) cyclic.push_back(p);
      },
      c.opts.vertex_cap);
  const auto entries = critical_sweep_serial(cyclic, c.opts.tol);
  for (const CriticalSweepEntry& e : entries) {
    const CriticalPoint& cp = e.point;
    const Json id{{"partition", partition_to_json(cyclic[e.partition_index])["labels"]},
                  {"eigen_index", cp.eigen_index}};
    if (e.morse) {
      c.record("morse-equals-deficiency", e.morse->index == cp.deficiency,
               {{"id", id}, {"morse", e.morse->index}, {"deficiency", cp.deficiency},
                {"hessian_eigenvalues", e.morse->hessian_eigenvalues}});
    } else if (e.morse_error == "DegenerateHessian") {
      c.skip("morse-equals-deficiency", {{"id", id}, {"reason", e.morse_error}});
    } else {
      c.record("morse-equals-deficiency", false, {{"id", id}, {"error", e.morse_error}});
    }
    if (e.restoration) {
      c.record("restoration-prediction",
               e.restoration->predicted_index == e.restoration->actual_index &&
                   e.restoration->tree_index == nu,
               {{"id", id},
                {"predicted", e.restoration->predicted_index},
                {"actual", e.restoration->actual_index},
                {"tree_index", e.restoration->tree_index}});
    } else if (e.restoration_error == "ClassificationAmbiguous") {
      c.skip("restoration-prediction", {{"id", id}, {"reason", e.restoration_error}});
    } else {
      c.record("restoration-prediction", false, {{"id", id}, {"error", e.restoration_error}});
    }
  }
}

// ------------------------------------------------------------ tree-unique

void suite_tree_unique(Ctx& c) {
  const WeightedGraph g = c.graph(3, 8, 0.3);
  const int nu = c.between(2, std::min(4, g.vertex_count()));
  // Critical points of a tree partition come from positive eigenvectors; the
  // Courant-sharp one has index ν. Partitions that have one are preferred.
  std::vector<Partition> trees, with_sharp;
  for_each_partition(
      g, nu,
      [&](const Partition& p) {
        if (betti_number(p) != 0) return;
        trees.push_back(p);
        for (const CriticalPoint& cp : critical_points_from_spectrum(p, c.opts.tol)) {
          if (cp.eigen_index == nu) {
            with_sharp.push_back(p);
            break;
          }
        }
      },
      c.opts.vertex_cap);
  if (trees.empty()) {
    c.skip("tree-uniqueness", {{"reason", "no tree partition"}});
    return;
  }
  const auto& pool = with_sharp.empty() ? trees : with_sharp;
  const Partition& p = pool[c.rng.below(static_cast<int>(pool.size()))];
  std::optional<Vec> sharp;
  for (const CriticalPoint& cp : critical_points_from_spectrum(p, c.opts.tol)) {
    if (cp.eigen_index == nu) sharp = cp.alpha.as_vector();
  }
  std::vector<Vec> found;
  int failed = 0;
  for (int s = 0; s < 20; ++s) {
    ParamPoint start;
    for (std::size_t k = 0; k < p.boundary().size(); ++k) {
      start.alpha.push_back(std::exp(c.rng.uniform(-2.0, 2.0)));
    }
    try {
      found.push_back(solve_equipartition(p, start).as_vector());
    } catch (const Error&) {
      ++failed;
    }
  }
  const Json labels = partition_to_json(p)["labels"];
  if (found.empty()) {
    // No equipartition exists when no start reaches one and no eigenvector
    // provides one.
    c.record("tree-uniqueness", !sharp.has_value(),
             {{"partition", labels}, {"solved", 0}, {"failed", failed}});
    return;
  }
  double spread = 0.0;
  for (const Vec& a : found) spread = std::max(spread, (a - found[0]).cwiseAbs().maxCoeff());
  double to_sharp = std::numeric_limits<double>::infinity();
  if (sharp) to_sharp = (*sharp - found[0]).cwiseAbs().maxCoeff();
  c.record("tree-uniqueness", failed == 0 && spread <= 1e-7 && to_sharp <= 1e-7,
           {{"partition", labels},
            {"solved", found.size()},
            {"failed", failed},
            {"spread", spread},
            {"distance_to_courant_sharp", to_sharp}});
}

// ------------------------------------------------------------ lower-bound

void suite_lower_bound(Ctx& c) {
  const WeightedGraph g = c.graph(3, 8);
  const Signature sigma = random_signature(c.rng, g);
  const int nu = c.between(2, std::min(4, g.vertex_count()));
  MinimizeOptions mopts;
  mopts.seed = c.rng.next();

  std::optional<Partition> chosen;
  bool from_nodal = false;
  const SpectrumReport spec = eigendecompose(signed_laplacian(sigma));
  if (c.rng.coin() && is_nondegenerate(spec, nu, c.opts.tol.zero_tol, c.opts.tol.gap_rel)) {
    auto nodal = nodal_partition(sigma, spec.vector(nu), c.opts.tol.zero_tol);
    if (nodal && nodal->size() == nu) {
      chosen = std::move(nodal);
      from_nodal = true;
    }
  }
  if (!chosen) {
    std::vector<Partition> in_class;
    for_each_partition(
        g, nu,
        [&](const Partition& p) {
          if (p.boundary().size() <= static_cast<std::size_t>(c.opts.subset_cap) &&
              partition_class_membership(p, sigma.negative_edges(), c.opts.subset_cap)) {
            in_class.push_back(p);
          }
        },
        c.opts.vertex_cap);
    if (in_class.empty()) {
      c.skip("lower-bound", {{"reason", "class is empty"}});
    } else {
      chosen = in_class[c.rng.below(static_cast<int>(in_class.size()))];
    }
  }
  if (chosen) {
    const BoundReport r = lower_bound_check(sigma, *chosen, mopts, c.opts.subset_cap);
    bool ok = r.slack >= -1e-9;
    if (r.slack <= 1e-8) ok = ok && r.equality_case;
    if (from_nodal) ok = ok && r.slack <= 1e-8;
    Json d = bound_report_to_json(g, r);
    d["partition"] = partition_to_json(*chosen)["labels"];
    d["from_nodal"] = from_nodal;
    c.record("lower-bound", ok, d);
  }

  // The nodal set of an L^Γ eigenvector is switching equivalent to Γ, and a
  // nodal partition with that boundary lies in Γ's class.
  bool all = true;
  int compared = 0;
  for (int n = 1; n <= spec.size(); ++n) {
    if (!is_nondegenerate(spec, n, c.opts.tol.zero_tol, c.opts.tol.gap_rel)) continue;
    const NodalReport r = nodal_report(sigma, spec.vector(n), n, c.opts.tol.zero_tol);
    if (r.has_zeros()) continue;
    ++compared;
    all = all && switching_equivalent(Signature(g, r.nodal_edges), sigma).has_value();
    const auto nodal = nodal_partition(sigma, spec.vector(n), c.opts.tol.zero_tol);
    if (nodal && nodal->boundary().size() <= static_cast<std::size_t>(c.opts.subset_cap)) {
      all = all && partition_class_membership(*nodal, sigma.negative_edges(), c.opts.subset_cap)
                       .has_value();
    }
  }
  c.record("nodal-class", all, {{"eigenvectors", compared}});

  // Global minimality among all ν-partitions when λ_ν(L) is Courant-sharp.
  MinimizeOptions quick = mopts;
  quick.starts = 4;
  const EnumerationMinimum em = enumerate_minimum(g, nu, quick, c.opts.vertex_cap);
  if (em.courant_sharp && em.nodal_partition) {
    const double nodal_value = em.estimates[*em.nodal_partition].energy;
    const double best = em.estimates[em.best].energy;
    c.record("global-minimality",
             best - em.lambda_nu >= -1e-8 && std::abs(nodal_value - em.lambda_nu) <= 1e-8,
             {{"nu", nu},
              {"lambda_nu", em.lambda_nu},
              {"nodal_energy", nodal_value},
              {"best_energy", best},
              {"partitions", em.partitions.size()}});
  } else {
    c.skip("global-minimality", {{"reason", "lambda_nu not Courant-sharp"}});
  }
}

// --------------------------------------------------------------- homology

void suite_homology(Ctx& c) {
  const WeightedGraph g = c.graph(3, 10);
  const Signature s1 = random_signature(c.rng, g);
  const Signature s2 = c.rng.coin()
                           ? switch_signature(s1, random_switching(c.rng, g.vertex_count()))
                           : random_signature(c.rng, g);
  const bool h = homologous(g, s1.negative_edges(), s2.negative_edges());
  const bool sw = switching_equivalent(s1, s2).has_value();
  c.record("homology-vs-switching", h == sw, {{"homologous", h}, {"switching", sw}});

  const int nu = c.between(1, std::min(5, g.vertex_count()));
  const Partition p = random_partition(c.rng, g, nu);
  c.record("cut-space-bipartite",
           in_cut_space(chain_space(g), BitVector::from_indices(g.edge_count(), p.boundary())) ==
               is_bipartite_partition(p));

  if (static_cast<int>(p.boundary().size()) <= std::min(c.opts.subset_cap, 14)) {
    const auto fast = partition_class_membership(p, s1.negative_edges(), c.opts.subset_cap);
    const auto slow =
        partition_class_membership_exhaustive(p, s1.negative_edges(), c.opts.subset_cap);
    bool witness_ok = true;
    if (fast) witness_ok = homologous(g, *fast, s1.negative_edges());
    c.record("membership-agreement", fast.has_value() == slow.has_value() && witness_ok,
             {{"member", fast.has_value()}});
  }

  const ChainSpace cs = chain_space(g);
  bool orthogonal = true;
  for (const auto& cyc : cs.cycle_basis) {
    for (const auto& cut : cs.cut_basis) orthogonal = orthogonal && !cyc.dot(cut);
  }
  // Cycles and cuts are orthogonal complements; they can still intersect
  // (an even cycle may be a cut), so only dimensions and independence count.
  EchelonBasis cycles(g.edge_count()), cuts(g.edge_count());
  for (const auto& v : cs.cycle_basis) cycles.insert(v);
  for (const auto& v : cs.cut_basis) cuts.insert(v);
  c.record("chain-decomposition",
           orthogonal && cycles.rank() == static_cast<int>(cs.cycle_basis.size()) &&
               cuts.rank() == static_cast<int>(cs.cut_basis.size()) &&
               static_cast<int>(cs.cycle_basis.size()) == g.edge_count() - g.vertex_count() + 1 &&
               static_cast<int>(cs.cut_basis.size()) == g.vertex_count() - 1);
}

// ------------------------------------------------------------------ ghost

void suite_ghost(Ctx& c) {
  const WeightedGraph g = c.graph(3, 8);
  int partitions = 0;
  bool ok = true;
  std::string failure;
  for (int nu = 1; nu <= g.vertex_count(); ++nu) {
    for_each_partition(
        g, nu,
        [&](const Partition& p) {
          ++partitions;
          try {
            verify_discretization(p);
          } catch (const Error& e) {
            if (ok) failure = e.what();
            ok = false;
          }
        },
        c.opts.vertex_cap);
  }
  c.record("reduced-operator", ok,
           {{"vertices", g.vertex_count()}, {"partitions", partitions}, {"first_failure", failure}});

  const int nu = c.between(1, g.vertex_count());
  const Partition p = random_partition(c.rng, g, nu);
  const GhostGraph ghost = build_ghost(p);
  Vec u(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) u[v] = c.rng.uniform(-1.0, 1.0);
  const Vec x = anticontinuous_extension(ghost, u);
  double worst = 0.0;
  for (const GhostPair& gp : ghost.pairs) {
    worst = std::max(worst, std::abs(x[gp.k] + x[gp.l]));
    worst = std::max(worst, std::abs((x[gp.k] - x[gp.i]) - (x[gp.l] - x[gp.j])));
  }
  c.record("anticontinuity", worst <= 1e-15 * std::max(1.0, u.cwiseAbs().maxCoeff()),
           {{"max_violation", worst}});

  const SpectrumReport spec = eigendecompose(partition_laplacian(p));
  const Eigen::MatrixXd op = ghost_operator(ghost);
  const Eigen::MatrixXd mass = mass_matrix(ghost);
  double res = 0.0;
  for (int n = 1; n <= spec.size(); ++n) {
    const Vec lifted = anticontinuous_extension(ghost, spec.vector(n));
    res = std::max(res, (op * lifted - spec.value(n) * (mass * lifted)).norm());
  }
  c.record("pullback-eigenpairs", res <= 1e-9, {{"max_residual", res}});
}

const std::map<std::string, std::function<void(Ctx&)>>& registry() {
  static const std::map<std::string, std::function<void(Ctx&)>> r{
      {"courant", suite_courant},         {"interlacing", suite_interlacing},
      {"shift", suite_shift},             {"correspondence", suite_correspondence},
      {"morse", suite_morse},             {"tree-unique", suite_tree_unique},
      {"lower-bound", suite_lower_bound}, {"homology", suite_homology},
      {"ghost", suite_ghost}};
  return r;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

}  // namespace

int SuiteResult::passes() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& r) {
    return r.status == CheckStatus::Pass;
  }));
}

int SuiteResult::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& r) {
    return r.status == CheckStatus::Fail;
  }));
}

int SuiteResult::skips() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& r) {
    return r.status == CheckStatus::Skip;
  }));
}

std::vector<const CheckRecord*> SuiteResult::named(const std::string& check) const {
  std::vector<const CheckRecord*> out;
  for (const auto& r : checks) {
    if (r.check == check) out.push_back(&r);
  }
  return out;
}

Json SuiteResult::to_json() const {
  Json list = Json::array();
  for (const auto& r : checks) {
    list.push_back(Json{{"instance", r.instance},
                        {"check", r.check},
                        {"status", status_name(r.status)},
                        {"detail", r.detail}});
  }
  return Json{{"suite", suite},   {"seed", seed},         {"count", count},
              {"passed", passed()}, {"passes", passes()}, {"failures", failures()},
              {"skipped", skips()}, {"checks", list}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"courant",     "interlacing", "shift",
                                              "correspondence", "morse",   "tree-unique",
                                              "lower-bound", "homology",    "ghost"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count,
                      const SuiteOptions& opts) {
  const auto& reg = registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw Error(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
  if (count < 0) throw Error(ErrorKind::InvalidInput, "instance count must be non-negative");

  std::vector<std::vector<CheckRecord>> per(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < count; ++k) {
    Ctx ctx{k, SplitMix64(derive_seed(seed, static_cast<std::uint64_t>(k))), opts, {}};
    try {
      it->second(ctx);
    } catch (const std::exception& e) {
      ctx.record("no-unexpected-error", false, {{"error", e.what()}});
    }
    per[k] = std::move(ctx.out);
  }
  SuiteResult result{name, seed, count, {}};
  for (auto& v : per) {
    for (auto& r : v) result.checks.push_back(std::move(r));
  }
  return result;
}

}  // namespace spl
