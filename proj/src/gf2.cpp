#include "spl/gf2.hpp"

#include <bit>

#include "spl/error.hpp"

namespace spl {

BitVector BitVector::from_indices(int size, std::span<const int> ones) {
  BitVector v(size);
  for (int k : ones) {
    if (k < 0 || k >= size) throw Error(ErrorKind::InvalidInput, "edge index out of range");
    v.set(k);
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

bool BitVector::any() const {
  for (auto w : words_) {
    if (w) return true;
  }
  return false;
}

int BitVector::lowest() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
  }
  return -1;
}

bool BitVector::dot(const BitVector& o) const {
  int parity = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) parity ^= std::popcount(words_[w] & o.words_[w]) & 1;
  return parity != 0;
}

std::vector<int> BitVector::indices() const {
  std::vector<int> out;
  for (int k = 0; k < size_; ++k) {
    if (get(k)) out.push_back(k);
  }
  return out;
}

BitVector EchelonBasis::reduce(BitVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (v.get(pivots_[r])) v ^= rows_[r];
  }
  return v;
}

bool EchelonBasis::insert(BitVector v) {
  v = reduce(std::move(v));
  const int p = v.lowest();
  if (p < 0) return false;
  // Keep earlier rows free of the new pivot so reduce() needs a single pass.
  for (auto& row : rows_) {
    if (row.get(p)) row ^= v;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

ChainSpace chain_space(const WeightedGraph& graph) {
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  ChainSpace cs;
  cs.edge_count = m;

  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0), order{0};
  std::vector<char> seen(n, 0), is_tree(m, 0);
  seen[0] = 1;
  for (std::size_t q = 0; q < order.size(); ++q) {
    const int u = order[q];
    for (const Incidence& inc : graph.neighbors(u)) {
      if (seen[inc.vertex]) continue;
      seen[inc.vertex] = 1;
      parent[inc.vertex] = u;
      parent_edge[inc.vertex] = inc.edge;
      depth[inc.vertex] = depth[u] + 1;
      is_tree[inc.edge] = 1;
      order.push_back(inc.vertex);
    }
  }
  for (int e = 0; e < m; ++e) {
    if (is_tree[e]) cs.tree_edges.push_back(e);
  }

  // Fundamental cycles: the non-tree edge plus the tree path between its ends.
  for (int e = 0; e < m; ++e) {
    if (is_tree[e]) continue;
    BitVector cyc(m);
    cyc.set(e);
    int a = graph.edge(e).i;
    int b = graph.edge(e).j;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      cyc.flip(parent_edge[a]);
      a = parent[a];
    }
    cs.cycle_basis.push_back(std::move(cyc));
  }

  // Fundamental cuts: δ of the subtree hanging below each tree edge.
  for (int child : order) {
    if (parent[child] < 0) continue;
    std::vector<char> in_subtree(n, 0);
    in_subtree[child] = 1;
    for (int v : order) {
      if (parent[v] >= 0 && in_subtree[parent[v]]) in_subtree[v] = 1;
    }
    cs.cut_basis.push_back(coboundary(graph, in_subtree));
  }
  return cs;
}

BitVector coboundary(const WeightedGraph& graph, const std::vector<char>& x) {
  BitVector out(graph.edge_count());
  for (int e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edge(e);
    if ((x[ed.i] != 0) != (x[ed.j] != 0)) out.set(e);
  }
  return out;
}

bool in_cut_space(const ChainSpace& space, const BitVector& gamma) {
  EchelonBasis basis(space.edge_count);
  for (const auto& c : space.cut_basis) basis.insert(c);
  return basis.contains(gamma);
}

}  // namespace spl
