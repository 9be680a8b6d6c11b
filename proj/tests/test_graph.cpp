#include <set>

#include "doctest.h"
#include "spl/error.hpp"
#include "spl/graph.hpp"
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

// Counts ν-partitions by trying every labeling in {0..ν-1}^n and keeping
// those whose classes are all nonempty and connected.
int brute_force_partition_count(const WeightedGraph& g, int nu) {
  const int n = g.vertex_count();
  std::set<std::vector<int>> seen;
  std::vector<int> lab(n, 0);
  for (;;) {
    std::vector<int> canon = canonical_labels(lab);
    int classes = 0;
    for (int x : canon) classes = std::max(classes, x + 1);
    if (classes == nu && !seen.count(canon)) {
      bool connected = true;
      for (int k = 0; k < nu && connected; ++k) {
        // flood fill inside class k
        std::vector<int> stack, mark(n, 0);
        int size = 0, start = -1;
        for (int v = 0; v < n; ++v) {
          if (canon[v] == k) {
            ++size;
            if (start < 0) start = v;
          }
        }
        stack.push_back(start);
        mark[start] = 1;
        int reached = 0;
        while (!stack.empty()) {
          const int u = stack.back();
          stack.pop_back();
          ++reached;
          for (const Edge& e : g.edges()) {
            int other = e.i == u ? e.j : (e.j == u ? e.i : -1);
            if (other >= 0 && canon[other] == k && !mark[other]) {
              mark[other] = 1;
              stack.push_back(other);
            }
          }
        }
        connected = reached == size;
      }
      if (connected) seen.insert(canon);
    }
    int pos = 0;
    while (pos < n && ++lab[pos] == nu) lab[pos++] = 0;
    if (pos == n) break;
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("graph construction validates input") {
  const WeightedGraph t = triangle();
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.degree(0) == doctest::Approx(2.0));

  const WeightedGraph p = WeightedGraph::build(3, {{0, 1, 1}, {2, 1, 2}});
  CHECK(p.edge_count() == 2);
  CHECK(p.edge(1).i == 1);
  CHECK(p.edge(1).j == 2);
  CHECK(p.degree(1) == doctest::Approx(3.0));

  CHECK(kind_of([] { WeightedGraph::build(3, {{0, 1, 1}}); }) == ErrorKind::Disconnected);
  CHECK(kind_of([] { WeightedGraph::build(2, {{0, 1, 1}, {1, 0, 2}}); }) ==
        ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { WeightedGraph::build(2, {{0, 0, 1}, {0, 1, 1}}); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([] { WeightedGraph::build(2, {{0, 1, 0.0}}); }) == ErrorKind::NonPositiveWeight);
  CHECK(kind_of([] { WeightedGraph::build(2, {{0, 5, 1}}); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("partition boundary and component count") {
  const Partition singletons = make_partition(triangle(), {0, 1, 2});
  CHECK(singletons.size() == 3);
  CHECK(singletons.boundary().size() == 3);

  const Partition cut = make_partition(path3(), {0, 0, 1});
  CHECK(cut.size() == 2);
  REQUIRE(cut.boundary().size() == 1);
  CHECK(cut.graph().edge(cut.boundary()[0]).i == 1);
  CHECK(cut.graph().edge(cut.boundary()[0]).j == 2);

  // Leaves 2, 3, 4 share a label but only meet through the center.
  CHECK(kind_of([] { make_partition(star(4), {0, 0, 1, 1, 1}); }) ==
        ErrorKind::DisconnectedComponent);
}

TEST_CASE("partition multigraph") {
  const Partition fig = make_partition(three_triangles(), three_triangle_labels());
  const PartitionMultigraph m = partition_multigraph(fig);
  CHECK(m.node_count == 3);
  CHECK(m.edges.size() == 4);
  CHECK(betti_number(fig) == 2);
  CHECK_FALSE(is_bipartite_partition(fig));
  CHECK_FALSE(is_tree_partition(fig));

  const Partition tri = make_partition(triangle(), {0, 1, 2});
  CHECK(partition_multigraph(tri).edges.size() == 3);
  CHECK_FALSE(is_bipartite_partition(tri));
  CHECK_FALSE(is_tree_partition(tri));

  const Partition path = make_partition(path3(), {0, 0, 1});
  const PartitionMultigraph pm = partition_multigraph(path);
  REQUIRE(pm.edges.size() == 1);
  CHECK(pm.edges[0].k != pm.edges[0].l);
  CHECK(is_bipartite_partition(path));
  CHECK(is_tree_partition(path));

  // Two components joined by two edges: an even 2-cycle.
  const Partition c4 = make_partition(cycle(4), {0, 0, 1, 1});
  CHECK(is_bipartite_partition(c4));
  CHECK_FALSE(is_tree_partition(c4));
  CHECK(betti_number(c4) == 1);
}

TEST_CASE("partition enumeration matches brute force") {
  CHECK(enumerate_partitions(triangle(), 3).size() == 1);
  const auto path_parts = enumerate_partitions(path3(), 2);
  CHECK(path_parts.size() == 2);
  CHECK(enumerate_partitions(cycle(4), 2).size() == 6);
  CHECK(brute_force_partition_count(cycle(4), 2) == 6);

  SplitMix64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const WeightedGraph g = random_graph(rng, 3 + rng.below(4), 0.5);
    for (int nu = 1; nu <= g.vertex_count(); ++nu) {
      const auto parts = enumerate_partitions(g, nu);
      CHECK(static_cast<int>(parts.size()) == brute_force_partition_count(g, nu));
      std::set<std::vector<int>> distinct;
      for (const auto& p : parts) {
        distinct.insert(std::vector<int>(p.labels().begin(), p.labels().end()));
      }
      CHECK(distinct.size() == parts.size());
    }
  }
}

TEST_CASE("enumeration respects the vertex cap") {
  CHECK(kind_of([] { enumerate_partitions(cycle(6), 2, 5); }) == ErrorKind::CapExceeded);
}

TEST_CASE("canonical labels and equality") {
  const std::vector<int> raw{2, 2, 0};
  CHECK(canonical_labels(raw) == std::vector<int>{0, 0, 1});
  CHECK(same_partition(make_partition(path3(), {1, 1, 0}), make_partition(path3(), {0, 0, 1})));
  CHECK_FALSE(
      same_partition(make_partition(path3(), {0, 1, 1}), make_partition(path3(), {0, 0, 1})));
}
