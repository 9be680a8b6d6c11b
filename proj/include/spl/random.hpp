#pragma once

#include <cstdint>
#include <vector>

#include "spl/graph.hpp"
#include "spl/signed.hpp"

namespace spl {

/// SplitMix64 (Steele, Lea, Flood). Chosen because it is a few lines long
/// and reproducible in any language from the seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform in [0, n).
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool coin(double p = 0.5) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

/// Independent stream for instance k of a run seeded with seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k);

/// Erdős–Rényi G(n, p) redrawn until connected, weights uniform in [0.5, 2].
WeightedGraph random_graph(SplitMix64& rng, int n, double p);
/// Each edge negative with probability p.
Signature random_signature(SplitMix64& rng, const WeightedGraph& graph, double p = 0.5);
SwitchingFunction random_switching(SplitMix64& rng, int n);
/// Each weight multiplied by 1 + rel·U(-1, 1), to break degeneracies.
WeightedGraph jitter_weights(SplitMix64& rng, const WeightedGraph& graph, double rel);
/// Labels of a random connected ν-partition grown from ν random seeds.
Partition random_partition(SplitMix64& rng, const WeightedGraph& graph, int nu);

}  // namespace spl
