#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spl/graph.hpp"

namespace spl {

/// Dense symmetric matrix indexed by vertices.
using SymOperator = Eigen::MatrixXd;

/// A ±1 edge labeling, held as its set Γ of negative edges.
class Signature {
 public:
  /// Negative edge ids may repeat or be unsorted; they are normalized.
  Signature(WeightedGraph graph, std::vector<int> negative_edges);

  static Signature all_positive(const WeightedGraph& graph);
  static Signature all_negative(const WeightedGraph& graph);
  /// σ^∂P: negative exactly on the partition boundary.
  static Signature from_partition(const Partition& partition);

  const WeightedGraph& graph() const { return graph_; }
  std::span<const int> negative_edges() const { return negative_; }
  int sign(int edge) const { return mask_[edge] ? -1 : 1; }
  bool is_negative(int edge) const { return mask_[edge] != 0; }

  /// σ^{Γ1 Δ Γ2}, which equals σ^{Γ1}·σ^{Γ2} edgewise.
  Signature symmetric_difference(const Signature& other) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.graph_ == b.graph_ && a.negative_ == b.negative_;
  }

 private:
  WeightedGraph graph_;
  std::vector<int> negative_;
  std::vector<char> mask_;
};

struct SwitchingFunction {
  std::vector<int> tau;  // entries are +1 or -1

  static SwitchingFunction identity(int n) { return {std::vector<int>(n, 1)}; }
  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
};

/// σ^τ with σ^τ_ij = τ_i σ_ij τ_j.
Signature switch_signature(const Signature& sigma, const SwitchingFunction& tau);

/// Sign of a closed walk given as a vertex sequence whose last entry repeats
/// the first. Throws NotAClosedWalk if the walk is open or uses a non-edge.
int cycle_sign(const Signature& sigma, std::span<const int> walk);

/// Spanning-tree sign propagation from vertex 0 followed by a check of every
/// non-tree edge. Returns τ with σ^τ all positive, or nullopt when some cycle
/// is negative.
std::optional<SwitchingFunction> is_balanced(const Signature& sigma);

/// τ with σ1^τ = σ2, or nullopt.
std::optional<SwitchingFunction> switching_equivalent(const Signature& s1, const Signature& s2);

/// L^σ = D - A^σ.
SymOperator signed_laplacian(const Signature& sigma);
/// The signed Laplacian whose negative edges are exactly ∂P.
SymOperator partition_laplacian(const Partition& partition);
/// D^τ M D^τ.
SymOperator conjugate_by_switching(const SymOperator& op, const SwitchingFunction& tau);

/// Σ w_ij (u_i - σ_ij u_j)^2 evaluated edge by edge.
double signed_quadratic_form(const Signature& sigma, const Eigen::VectorXd& u);

}  // namespace spl
