#include "doctest.h"
#include "spl/error.hpp"
#include "spl/ghost.hpp"
#include "spl/random.hpp"
#include "spl/signed.hpp"
#include "spl/spectral.hpp"
#include "support.hpp"

using namespace spl;
using namespace spl::testing;

TEST_CASE("ghost graph shape") {
  const GhostGraph path = build_ghost(make_partition(path3(1, 2), {0, 0, 1}));
  CHECK(path.vertex_count == 5);
  REQUIRE(path.pairs.size() == 1);
  const GhostPair& gp = path.pairs[0];
  CHECK(gp.i == 1);
  CHECK(gp.j == 2);
  CHECK(gp.k == 3);
  CHECK(gp.l == 4);
  int ghost_edges = 0;
  for (const Edge& e : path.edges) {
    if (e.j >= 3) {
      ++ghost_edges;
      CHECK(e.w == 4.0);
    }
  }
  CHECK(ghost_edges == 2);

  const GhostGraph tri = build_ghost(make_partition(triangle(), {0, 1, 2}));
  CHECK(tri.vertex_count == 9);
  CHECK(tri.edges.size() == 6);

  const GhostGraph none = build_ghost(make_partition(triangle(), {0, 0, 0}));
  CHECK(none.vertex_count == 3);
  CHECK(none.edges.size() == 3);
}

TEST_CASE("anticontinuous extension") {
  const GhostGraph path = build_ghost(make_partition(path3(1, 2), {0, 0, 1}));
  CHECK(anticontinuous_extension(path, Eigen::Vector3d::Zero()).norm() == 0.0);
  const Eigen::VectorXd x = anticontinuous_extension(path, Eigen::Vector3d(5, 2, 2));
  CHECK(x[3] == 0.0);
  CHECK(x[4] == 0.0);
  const Eigen::VectorXd y = anticontinuous_extension(path, Eigen::Vector3d(0, 3, 1));
  CHECK(y[3] == doctest::Approx(1.0));
  CHECK(y[4] == doctest::Approx(-1.0));
  CHECK((extension_matrix(path) * Eigen::Vector3d(0, 3, 1) - y).norm() < 1e-15);
}

TEST_CASE("reduced operator matches hand assembly") {
  const Partition p = make_partition(path3(1, 2), {0, 0, 1});
  Eigen::Matrix3d expected;
  expected << 1, -1, 0, -1, 3, 2, 0, 2, 2;
  CHECK((reduced_operator(build_ghost(p)) - expected).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(verify_discretization(p));

  const Partition tri = make_partition(triangle(), {0, 1, 2});
  Eigen::Matrix3d neg;
  neg << 2, 1, 1, 1, 2, 1, 1, 1, 2;
  CHECK((reduced_operator(build_ghost(tri)) - neg).cwiseAbs().maxCoeff() < 1e-13);

  const Partition whole = make_partition(triangle(), {0, 0, 0});
  CHECK((reduced_operator(build_ghost(whole)) - partition_laplacian(whole)).cwiseAbs().maxCoeff() <
        1e-13);
}

TEST_CASE("every partition of small random graphs") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    const WeightedGraph g = random_graph(rng, 3 + rng.below(4), 0.6);
    for (int nu = 1; nu <= g.vertex_count(); ++nu) {
      for_each_partition(g, nu, [&](const Partition& p) { CHECK(verify_discretization(p)); });
    }
  }
}

TEST_CASE("mass-weighted eigenpairs pull back") {
  SplitMix64 rng(17);
  const WeightedGraph g = random_graph(rng, 6, 0.5);
  const Partition p = random_partition(rng, g, 3);
  const GhostGraph ghost = build_ghost(p);
  const SpectrumReport spec = eigendecompose(partition_laplacian(p));
  for (int n = 1; n <= spec.size(); ++n) {
    const Eigen::VectorXd lifted = anticontinuous_extension(ghost, spec.vector(n));
    CHECK((ghost_operator(ghost) * lifted - spec.value(n) * (mass_matrix(ghost) * lifted)).norm() <
          1e-9);
  }
}
