#include <cmath>
#include <functional>

#include "doctest.h"
#include "spl/error.hpp"
#include "spl/param_partition.hpp"
#include "spl/random.hpp"
#include "support.hpp"

using namespace spl;
using namespace spl::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an spl::Error");
  return ErrorKind::InvalidInput;
}

ParamPoint constant(const Partition& p, double a) {
  return {std::vector<double>(p.boundary().size(), a)};
}

double smallest_eigenvalue(const Eigen::MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues()[0];
}

}  // namespace

TEST_CASE("edge perturbation") {
  const Eigen::Matrix2d b2 = edge_perturbation(2.0);
  CHECK(b2(0, 0) == 2.0);
  CHECK(b2(0, 1) == -1.0);
  CHECK(b2(1, 0) == -1.0);
  CHECK(b2(1, 1) == 0.5);
  const Eigen::Matrix2d b1 = edge_perturbation(1.0);
  CHECK((b1 * Eigen::Vector2d(1, 1)).norm() == 0.0);
  const double a = 0.37;
  CHECK((edge_perturbation(a) * Eigen::Vector2d(1, a)).norm() < 1e-15);
  CHECK(kind_of([] { edge_perturbation(0.0); }) == ErrorKind::ZeroAlpha);
}

TEST_CASE("perturbed operator decouples components") {
  const Partition tri = make_partition(triangle(), {0, 1, 2});
  const SymOperator op = perturbed_operator(tri, constant(tri, 1.0));
  CHECK((op - 4.0 * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  SplitMix64 rng(2);
  for (int trial = 0; trial < 15; ++trial) {
    const WeightedGraph g = random_graph(rng, 4 + rng.below(5), 0.5);
    const Partition p = random_partition(rng, g, 2 + rng.below(2));
    ParamPoint a;
    for (std::size_t b = 0; b < p.boundary().size(); ++b) a.alpha.push_back(rng.uniform(0.2, 3));
    const SymOperator full = perturbed_operator(p, a);
    for (int i = 0; i < g.vertex_count(); ++i) {
      for (int j = 0; j < g.vertex_count(); ++j) {
        if (p.component_of(i) != p.component_of(j)) CHECK(full(i, j) == 0.0);
      }
    }
    for (int k = 0; k < p.size(); ++k) {
      const auto verts = p.component(k);
      const Eigen::MatrixXd block = component_block(p, a, k);
      for (std::size_t x = 0; x < verts.size(); ++x) {
        for (std::size_t y = 0; y < verts.size(); ++y) {
          CHECK(block(x, y) == doctest::Approx(full(verts[x], verts[y])).epsilon(1e-14));
        }
      }
    }
  }
}

TEST_CASE("energy values") {
  const Partition tri = make_partition(triangle(), {0, 1, 2});
  const Eigen::VectorXd f = phi(tri, constant(tri, 1.0));
  CHECK((f.array() - 4.0).abs().maxCoeff() < 1e-14);
  CHECK(energy(tri, constant(tri, 1.0)) == doctest::Approx(4.0));
  CHECK(is_equipartition(tri, constant(tri, 1.0)));

  const Partition whole = make_partition(path3(1, 2), {0, 0, 0});
  CHECK(std::abs(energy(whole, ParamPoint{})) < 1e-12);
  CHECK(is_equipartition(whole, ParamPoint{}));

  // {01|2} with weights (1, 2): blocks [[1,-1],[-1,3+2α]] and [2+2/α].
  const Partition p = make_partition(path3(1, 2), {0, 0, 1});
  const Eigen::VectorXd pf = phi(p, constant(p, 1.0));
  CHECK(pf[0] == doctest::Approx(3 - std::sqrt(5.0)).epsilon(1e-12));
  CHECK(pf[1] == doctest::Approx(4.0));
  CHECK(energy(p, constant(p, 1.0)) == doctest::Approx(4.0));
  CHECK_FALSE(is_equipartition(p, constant(p, 1.0)));

  Eigen::Matrix2d first;
  first << 1, -1, -1, 3 + 2 * 0.6;
  const Eigen::VectorXd at = phi(p, constant(p, 0.6));
  CHECK(at[0] == doctest::Approx(smallest_eigenvalue(first)).epsilon(1e-12));
  CHECK(at[1] == doctest::Approx(2 + 2 / 0.6).epsilon(1e-12));

  CHECK(kind_of([&] { phi(p, constant(p, -1.0)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("Jacobian against central differences") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedGraph g = random_graph(rng, 4 + rng.below(5), 0.5);
    const Partition p = random_partition(rng, g, 2 + rng.below(3));
    ParamPoint a;
    for (std::size_t b = 0; b < p.boundary().size(); ++b) {
      a.alpha.push_back(std::exp(rng.uniform(-1, 1)));
    }
    Eigen::MatrixXd jac;
    try {
      jac = phi_jacobian(p, a);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateBlock);
      continue;
    }
    for (std::size_t b = 0; b < a.alpha.size(); ++b) {
      const double h = 1e-6 * a.alpha[b];
      ParamPoint up = a, down = a;
      up.alpha[b] += h;
      down.alpha[b] -= h;
      const Eigen::VectorXd fd = (phi(p, up) - phi(p, down)) / (2 * h);
      CHECK((fd - jac.col(b)).cwiseAbs().maxCoeff() <=
            1e-5 * std::max(1.0, jac.cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("equipartition from an eigenvector") {
  const Partition tri = make_partition(triangle(), {0, 1, 2});
  const ParamPoint a = alpha_from_eigenvector(tri, Eigen::Vector3d(1, 1, 1) / std::sqrt(3.0));
  for (double x : a.alpha) CHECK(x == doctest::Approx(1.0));
  CHECK(energy(tri, a) == doctest::Approx(4.0));

  // negative global sign is accepted
  const ParamPoint b = alpha_from_eigenvector(tri, -Eigen::Vector3d(1, 1, 1));
  for (double x : b.alpha) CHECK(x == doctest::Approx(1.0));

  // every mixed-sign eigenvector has the wrong nodal partition
  const Partition p = make_partition(path3(1, 2), {0, 0, 1});
  const SpectrumReport spec = eigendecompose(partition_laplacian(p));
  int mixed = 0;
  for (int n = 1; n <= 3; ++n) {
    const Eigen::VectorXd v = spec.vector(n);
    if (v.minCoeff() < -1e-9 && v.maxCoeff() > 1e-9 && v.cwiseAbs().minCoeff() > 1e-9) {
      ++mixed;
      CHECK(kind_of([&] { alpha_from_eigenvector(p, v); }) == ErrorKind::WrongNodalPartition);
    }
  }
  CHECK(mixed >= 1);

  CHECK(kind_of([&] { alpha_from_eigenvector(tri, Eigen::Vector3d(1, 0, 1)); }) ==
        ErrorKind::DegenerateEigenvector);
}

TEST_CASE("Newton solve of the equipartition equations") {
  // Tree partition {0|12}: the unique equipartition is the Courant-sharp one.
  const Partition p = make_partition(path3(1, 2), {0, 1, 1});
  const ParamPoint sol = solve_equipartition(p, constant(p, 1.0));
  CHECK(is_equipartition(p, sol));
  CHECK(energy(p, sol) == doctest::Approx(3 - std::sqrt(3.0)).epsilon(1e-10));
  const SpectrumReport spec = eigendecompose(partition_laplacian(p));
  CHECK(energy(p, sol) == doctest::Approx(spec.value(2)).epsilon(1e-10));

  // Starting on the manifold returns the same point.
  const ParamPoint again = solve_equipartition(p, sol);
  CHECK(again.alpha[0] == sol.alpha[0]);

  const Partition tri = make_partition(triangle(), {0, 1, 2});
  const ParamPoint t = solve_equipartition(tri, ParamPoint{{1.2, 0.9, 1.1}});
  const Eigen::VectorXd f = phi(tri, t);
  CHECK(f.maxCoeff() - f.minCoeff() <= 1e-10 * f.maxCoeff());

  // {01|2}: the first block stays below 1, the second above 2.
  const Partition none = make_partition(path3(1, 2), {0, 0, 1});
  const ErrorKind k = kind_of([&] { solve_equipartition(none, constant(none, 1.0)); });
  CHECK((k == ErrorKind::LeftPositiveOrthant || k == ErrorKind::NoConvergence));
}

TEST_CASE("manifold frame and retraction") {
  const Partition tri = make_partition(triangle(), {0, 1, 2});
  const ParamPoint one = constant(tri, 1.0);
  const ManifoldFrame frame = manifold_frame(tri, one);
  CHECK(frame.tangent.cols() == 1);
  CHECK(frame.normal.cols() == 2);
  CHECK((frame.tangent.transpose() * frame.normal).cwiseAbs().maxCoeff() < 1e-12);

  const ParamPoint moved = shift_log(one, 0.05 * frame.tangent.col(0) + 0.02 * frame.normal.col(0));
  const ParamPoint back = retract(tri, moved, frame.normal);
  CHECK(is_equipartition(tri, back, 1e-12));

  // Along the tangent the energy is stationary at α ≡ 1 to first order.
  const double e0 = energy(tri, one);
  const double h = 1e-4;
  const double up = energy(tri, retract(tri, shift_log(one, h * frame.tangent.col(0)), frame.normal));
  const double down =
      energy(tri, retract(tri, shift_log(one, -h * frame.tangent.col(0)), frame.normal));
  CHECK(std::abs(up - down) < 1e-9);
  CHECK(up > e0);
}
