#include "doctest.h"
#include "spl/bounds.hpp"
#include "spl/error.hpp"
#include "spl/kernels.hpp"
#include "spl/random.hpp"
#include "support.hpp"

using namespace spl;
using namespace spl::testing;

// The parallel kernels write one slot per index, so they must agree with the
// serial versions bit for bit.

TEST_CASE("subset eigenvalues: parallel equals serial") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const WeightedGraph g = random_graph(rng, 5 + rng.below(4), 0.6);
    const Partition p = random_partition(rng, g, 3);
    if (p.boundary().size() > 12) continue;
    const auto par = subset_lambda_values(p);
    const auto ser = subset_lambda_values_serial(p);
    CHECK(par == ser);
    CHECK(par.size() == (std::size_t{1} << p.boundary().size()));
  }
}

TEST_CASE("subset eigenvalues against direct solves") {
  const Partition tri = make_partition(triangle(), {0, 1, 2});
  const auto values = subset_lambda_values(tri);
  REQUIRE(values.size() == 8);
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    std::vector<int> gamma;
    for (int b = 0; b < 3; ++b) {
      if ((mask >> b) & 1u) gamma.push_back(tri.boundary()[b]);
    }
    CHECK(values[mask] == doctest::Approx(lambda_nu(Signature(tri.graph(), gamma), 3)));
  }
}

TEST_CASE("energy estimates: parallel equals serial") {
  SplitMix64 rng(5);
  const WeightedGraph g = random_graph(rng, 6, 0.5);
  const auto parts = enumerate_partitions(g, 2);
  MinimizeOptions opts;
  opts.starts = 3;
  const auto par = partition_energy_estimates(parts, opts);
  const auto ser = partition_energy_estimates_serial(parts, opts);
  REQUIRE(par.size() == ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) {
    CHECK(par[k].energy == ser[k].energy);
    CHECK(par[k].alpha.alpha == ser[k].alpha.alpha);
  }
}

TEST_CASE("critical sweep: parallel equals serial") {
  SplitMix64 rng(6);
  const WeightedGraph g = random_graph(rng, 6, 0.6);
  std::vector<Partition> parts = enumerate_partitions(g, 2);
  const auto par = critical_sweep(parts);
  const auto ser = critical_sweep_serial(parts);
  REQUIRE(par.size() == ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) {
    CHECK(par[k].partition_index == ser[k].partition_index);
    CHECK(par[k].point.alpha.alpha == ser[k].point.alpha.alpha);
    CHECK(par[k].morse.has_value() == ser[k].morse.has_value());
    if (par[k].morse && ser[k].morse) CHECK(par[k].morse->index == ser[k].morse->index);
    CHECK(par[k].morse_error == ser[k].morse_error);
    CHECK(par[k].restoration_error == ser[k].restoration_error);
  }
}

TEST_CASE("errors inside parallel regions surface after the loop") {
  // A boundary above the shift width of the subset mask is refused up front.
  const WeightedGraph g = cycle(4);
  const Partition p = make_partition(g, {0, 1, 2, 3});
  CHECK_NOTHROW(subset_lambda_values(p));
  const std::vector<Partition> none;
  CHECK(partition_energy_estimates(none).empty());
}
