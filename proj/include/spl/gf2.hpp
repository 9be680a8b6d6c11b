#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spl/graph.hpp"

namespace spl {

/// Packed vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector from_indices(int size, std::span<const int> ones);

  int size() const { return size_; }
  bool get(int k) const { return (words_[k >> 6] >> (k & 63)) & 1u; }
  void set(int k, bool v = true) {
    const std::uint64_t bit = std::uint64_t{1} << (k & 63);
    if (v) words_[k >> 6] |= bit; else words_[k >> 6] &= ~bit;
  }
  void flip(int k) { words_[k >> 6] ^= std::uint64_t{1} << (k & 63); }
  BitVector& operator^=(const BitVector& o);
  bool any() const;
  /// Index of the lowest set bit, or -1.
  int lowest() const;
  /// Parity of the bitwise AND, the standard form t(x, y) = Σ x_e y_e.
  bool dot(const BitVector& o) const;
  std::vector<int> indices() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-echelon basis built incrementally by Gaussian elimination. Each stored
/// row has a distinct pivot (its lowest set bit).
class EchelonBasis {
 public:
  explicit EchelonBasis(int size) : size_(size) {}
  /// Adds v to the span; returns false if it was already in it.
  bool insert(BitVector v);
  /// Reduces v against the basis; zero exactly when v is in the span.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return !reduce(v).any(); }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int size_;
  std::vector<BitVector> rows_;
  std::vector<int> pivots_;
};

/// Edge space C_1(G, Z_2) split into cycle space and cut space, using the BFS
/// spanning tree rooted at vertex 0.
struct ChainSpace {
  int edge_count = 0;
  std::vector<int> tree_edges;
  std::vector<BitVector> cycle_basis;  // one fundamental cycle per non-tree edge
  std::vector<BitVector> cut_basis;    // one fundamental cut per tree edge
};

ChainSpace chain_space(const WeightedGraph& graph);

/// δx: edges whose endpoints receive different bits of x.
BitVector coboundary(const WeightedGraph& graph, const std::vector<char>& x);

/// True iff gamma lies in the cut space, by elimination against the cut basis.
bool in_cut_space(const ChainSpace& space, const BitVector& gamma);

}  // namespace spl
