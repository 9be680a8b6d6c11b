#include <cmath>
#include <functional>

#include "doctest.h"
#include "spl/bounds.hpp"
#include "spl/error.hpp"
#include "spl/gf2.hpp"
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

// Γ is a cut iff Γ = δx for some x; try all x with x_0 = 0.
bool brute_force_cut(const WeightedGraph& g, const BitVector& gamma) {
  const int n = g.vertex_count();
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<char> x(n, 0);
    for (int v = 1; v < n; ++v) x[v] = (mask >> (v - 1)) & 1;
    if (coboundary(g, x) == gamma) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("bit vectors and echelon bases") {
  BitVector a = BitVector::from_indices(70, std::vector<int>{1, 65});
  BitVector b = BitVector::from_indices(70, std::vector<int>{65, 69});
  CHECK(a.dot(b));
  a ^= b;
  CHECK(a.indices() == std::vector<int>{1, 69});
  CHECK(a.lowest() == 1);
  CHECK_FALSE(BitVector(70).any());

  EchelonBasis basis(4);
  CHECK(basis.insert(BitVector::from_indices(4, std::vector<int>{0, 1})));
  CHECK(basis.insert(BitVector::from_indices(4, std::vector<int>{1, 2})));
  CHECK_FALSE(basis.insert(BitVector::from_indices(4, std::vector<int>{0, 2})));
  CHECK(basis.rank() == 2);
  CHECK_FALSE(basis.contains(BitVector::from_indices(4, std::vector<int>{3})));
}

TEST_CASE("chain space of random graphs") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedGraph g = random_graph(rng, 3 + rng.below(5), 0.5);
    const ChainSpace cs = chain_space(g);
    CHECK(static_cast<int>(cs.cut_basis.size()) == g.vertex_count() - 1);
    CHECK(static_cast<int>(cs.cycle_basis.size()) == g.edge_count() - g.vertex_count() + 1);
    for (const auto& c : cs.cycle_basis) {
      for (const auto& d : cs.cut_basis) CHECK_FALSE(c.dot(d));
    }
    for (int t = 0; t < 10; ++t) {
      BitVector gamma(g.edge_count());
      for (int e = 0; e < g.edge_count(); ++e) gamma.set(e, rng.coin());
      CHECK(in_cut_space(cs, gamma) == brute_force_cut(g, gamma));
    }
  }
}

TEST_CASE("homology of edge sets") {
  const WeightedGraph t = triangle();
  const std::vector<int> empty, all{0, 1, 2}, one{2}, two{1, 2};
  CHECK(homologous(t, all, all));
  CHECK_FALSE(homologous(t, empty, one));
  CHECK(homologous(t, empty, two));
}

TEST_CASE("class membership") {
  const Partition tri = make_partition(triangle(), {0, 1, 2});
  const std::vector<int> none;
  const auto w0 = partition_class_membership(tri, none);
  REQUIRE(w0.has_value());
  CHECK(homologous(tri.graph(), *w0, none));
  const std::vector<int> all{0, 1, 2};
  const auto w1 = partition_class_membership(tri, all);
  REQUIRE(w1.has_value());
  CHECK(homologous(tri.graph(), *w1, all));

  // Γ = ∂P maps to itself.
  const Partition fig = make_partition(three_triangles(), three_triangle_labels());
  const std::vector<int> bd(fig.boundary().begin(), fig.boundary().end());
  CHECK(*partition_class_membership(fig, bd) == bd);

  // A negative edge inside a component that cannot be switched away.
  const Partition whole = make_partition(triangle(), {0, 0, 0});
  const std::vector<int> odd{0};
  CHECK_FALSE(partition_class_membership(whole, odd).has_value());
  CHECK_FALSE(partition_class_membership_exhaustive(whole, odd).has_value());

  SplitMix64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedGraph g = random_graph(rng, 3 + rng.below(6), 0.5);
    const Partition p = random_partition(rng, g, 1 + rng.below(std::min(4, g.vertex_count())));
    if (p.boundary().size() > 14) continue;
    const Signature s = random_signature(rng, g);
    const auto fast = partition_class_membership(p, s.negative_edges());
    const auto slow = partition_class_membership_exhaustive(p, s.negative_edges());
    CHECK(fast.has_value() == slow.has_value());
    if (fast) {
      for (int e : *fast) CHECK(p.is_boundary(e));
      CHECK(homologous(g, *fast, s.negative_edges()));
    }
  }
  CHECK(kind_of([&] { partition_class_membership(fig, bd, 3); }) == ErrorKind::CapExceeded);
}

TEST_CASE("lower bound on the triangle") {
  const WeightedGraph t = triangle();
  const Signature neg = Signature::all_negative(t);
  CHECK(lambda_nu(neg, 3) == doctest::Approx(4.0));
  const Partition tri = make_partition(t, {0, 1, 2});
  const BoundReport r = lower_bound_check(neg, tri);
  CHECK(r.lambda_nu == doctest::Approx(4.0));
  CHECK(r.inf_energy_estimate == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(r.slack >= -1e-9);
  CHECK(r.equality_case);

  const Partition whole = make_partition(t, {0, 0, 0});
  const Signature one(t, {0});
  CHECK(kind_of([&] { lower_bound_check(one, whole); }) == ErrorKind::NotInClass);
}

TEST_CASE("maximized lower bound") {
  const Partition tri = make_partition(triangle(), {0, 1, 2});
  const MaxLowerBound best = maximize_lower_bound(tri);
  CHECK(best.value == doctest::Approx(4.0));
  CHECK(best.gamma == std::vector<int>{0, 1, 2});

  const Partition whole = make_partition(triangle(), {0, 0, 0});
  const MaxLowerBound trivial = maximize_lower_bound(whole);
  CHECK(trivial.gamma.empty());
  CHECK(std::abs(trivial.value) < 1e-12);

  // Tree partition realized by a Courant-sharp eigenvector: tight at ∂P.
  const WeightedGraph g = path3(1, 2);
  const Partition tree = make_partition(g, {0, 1, 1});
  const MaxLowerBound tb = maximize_lower_bound(tree);
  const double lam2 = lambda_nu(Signature::all_positive(g), 2);
  CHECK(tb.value == doctest::Approx(lam2));
  CHECK(tb.gamma.size() == 1);
  const EnergyEstimate est = minimize_energy(tree);
  CHECK(est.energy == doctest::Approx(lam2).epsilon(1e-9));
}

TEST_CASE("random partitions in a class satisfy the bound") {
  SplitMix64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const WeightedGraph g = random_graph(rng, 3 + rng.below(4), 0.5);
    const Signature s = random_signature(rng, g);
    const int nu = 2 + rng.below(std::min(3, g.vertex_count() - 1));
    for (const Partition& p : enumerate_partitions(g, nu)) {
      if (!partition_class_membership(p, s.negative_edges())) continue;
      MinimizeOptions opts;
      opts.starts = 4;
      const BoundReport r = lower_bound_check(s, p, opts);
      CHECK(r.slack >= -1e-9);
      ++checked;
      break;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("enumerated minimum with a Courant-sharp eigenvector") {
  // Find a seeded 6-vertex graph whose λ_2 eigenvector is Courant-sharp.
  SplitMix64 rng(2024);
  bool found = false;
  for (int trial = 0; trial < 20 && !found; ++trial) {
    const WeightedGraph g = random_graph(rng, 6, 0.5);
    MinimizeOptions opts;
    opts.starts = 4;
    const EnumerationMinimum em = enumerate_minimum(g, 2, opts);
    if (!em.courant_sharp || !em.nodal_partition) continue;
    found = true;
    const double lam2 = lambda_nu(Signature::all_positive(g), 2);
    CHECK(em.lambda_nu == doctest::Approx(lam2));
    CHECK(em.estimates[*em.nodal_partition].energy == doctest::Approx(lam2).epsilon(1e-8));
    CHECK(em.estimates[em.best].energy >= lam2 - 1e-8);
    for (const auto& e : em.estimates) CHECK(e.energy >= lam2 - 1e-8);
  }
  CHECK(found);

  const EnumerationMinimum all = enumerate_minimum(triangle(), 3);
  CHECK(all.partitions.size() == 1);
  CHECK(kind_of([] { enumerate_minimum(cycle(6), 2, {}, 5); }) == ErrorKind::CapExceeded);
}
