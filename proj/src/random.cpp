#include "spl/random.hpp"

#include <algorithm>
#include <numeric>

#include "spl/error.hpp"

namespace spl {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * (k + 1)));
  return mix.next();
}

WeightedGraph random_graph(SplitMix64& rng, int n, double p) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "random graphs need at least two vertices");
  for (;;) {
    std::vector<Edge> edges;
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    int pieces = n;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!rng.coin(p)) continue;
        edges.push_back({i, j, rng.uniform(0.5, 2.0)});
        const int a = find(i), b = find(j);
        if (a != b) {
          root[a] = b;
          --pieces;
        }
      }
    }
    if (pieces == 1) return WeightedGraph::build(n, std::move(edges));
  }
}

Signature random_signature(SplitMix64& rng, const WeightedGraph& graph, double p) {
  std::vector<int> negative;
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (rng.coin(p)) negative.push_back(e);
  }
  return Signature(graph, std::move(negative));
}

SwitchingFunction random_switching(SplitMix64& rng, int n) {
  SwitchingFunction tau;
  for (int v = 0; v < n; ++v) tau.tau.push_back(rng.coin() ? 1 : -1);
  return tau;
}

WeightedGraph jitter_weights(SplitMix64& rng, const WeightedGraph& graph, double rel) {
  std::vector<double> w;
  for (const Edge& e : graph.edges()) w.push_back(e.w * (1.0 + rel * rng.uniform(-1.0, 1.0)));
  return graph.with_weights(w);
}

Partition random_partition(SplitMix64& rng, const WeightedGraph& graph, int nu) {
  const int n = graph.vertex_count();
  if (nu < 1 || nu > n) throw Error(ErrorKind::InvalidInput, "component count out of range");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int k = n - 1; k > 0; --k) std::swap(order[k], order[rng.below(k + 1)]);

  // Grow ν regions from distinct seeds by random frontier steps; each region
  // stays connected because it only absorbs neighbors.
  std::vector<int> label(n, -1);
  for (int k = 0; k < nu; ++k) label[order[k]] = k;
  int assigned = nu;
  while (assigned < n) {
    std::vector<std::pair<int, int>> frontier;
    for (int v = 0; v < n; ++v) {
      if (label[v] < 0) continue;
      for (const Incidence& inc : graph.neighbors(v)) {
        if (label[inc.vertex] < 0) frontier.emplace_back(inc.vertex, label[v]);
      }
    }
    const auto [v, k] = frontier[rng.below(static_cast<int>(frontier.size()))];
    label[v] = k;
    ++assigned;
  }
  return make_partition(graph, canonical_labels(label));
}

}  // namespace spl
