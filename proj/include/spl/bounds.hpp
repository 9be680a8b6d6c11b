#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spl/gf2.hpp"
#include "spl/graph.hpp"
#include "spl/param_partition.hpp"
#include "spl/signed.hpp"

namespace spl {

inline constexpr int kDefaultSubsetCap = 20;

/// Γ1 Δ Γ2 lies in the cut space.
bool homologous(const WeightedGraph& graph, std::span<const int> gamma1,
                std::span<const int> gamma2);

/// A subset Γ̃ ⊆ ∂P with σ^Γ switching equivalent to σ^Γ̃, or nullopt.
///
/// Solves x_i + x_j = Γ_e over GF(2) on every non-boundary edge, one free bit
/// per component, and returns Γ + δx. Throws CapExceeded when |∂P| exceeds
/// subset_cap.
std::optional<std::vector<int>> partition_class_membership(const Partition& partition,
                                                           std::span<const int> gamma,
                                                           int subset_cap = kDefaultSubsetCap);

/// Same question answered by trying every subset of ∂P in increasing bitmask
/// order (bit k is the k-th boundary edge). Throws CapExceeded.
std::optional<std::vector<int>> partition_class_membership_exhaustive(
    const Partition& partition, std::span<const int> gamma, int subset_cap = kDefaultSubsetCap);

/// λ_ν(Γ): the ν-th eigenvalue of L^Γ.
double lambda_nu(const Signature& sigma, int nu);

struct MinimizeOptions {
  int starts = 16;
  std::uint64_t seed = 1;
  int max_steps = 200;
};

struct EnergyEstimate {
  ParamPoint alpha;
  double energy = 0.0;
  bool from_critical_seed = false;
};

/// Upper estimate of inf_{α > 0} Λ(P, α). Seeds are the critical points read
/// off the spectrum of L^∂P plus seeded random starts; each random start is
/// projected onto the equipartition manifold and descended along it.
/// Starts that fail to reach the manifold contribute Λ at the start.
EnergyEstimate minimize_energy(const Partition& partition, const MinimizeOptions& opts = {});

struct BoundReport {
  std::vector<int> gamma;
  double lambda_nu = 0.0;
  double inf_energy_estimate = 0.0;
  double slack = 0.0;
  bool equality_case = false;
  std::vector<int> witness_subset;
  ParamPoint best_alpha;
};

/// Checks λ_ν(Γ) ≤ inf Λ(P, ·). Throws NotInClass if P ∉ 𝒫_ν(Γ).
BoundReport lower_bound_check(const Signature& sigma, const Partition& partition,
                              const MinimizeOptions& opts = {},
                              int subset_cap = kDefaultSubsetCap);

struct MaxLowerBound {
  std::vector<int> gamma;
  double value = 0.0;
};

/// max over Γ ⊆ ∂P of λ_ν(Γ). Ties within 1e-10 relative go to the
/// lexicographically greatest indicator vector over boundary positions.
/// Throws CapExceeded.
MaxLowerBound maximize_lower_bound(const Partition& partition,
                                   int subset_cap = kDefaultSubsetCap);

struct EnumerationMinimum {
  std::vector<Partition> partitions;
  std::vector<EnergyEstimate> estimates;  // aligned with partitions
  int best = -1;                          // first partition attaining the minimum
  double lambda_nu = 0.0;                 // λ_ν of the plain Laplacian
  bool courant_sharp = false;             // λ_ν eigenvector non-degenerate with ν domains
  std::optional<int> nodal_partition;     // its nodal partition, when it is
};

/// Minimizes Λ on every connected ν-partition. Throws CapExceeded.
EnumerationMinimum enumerate_minimum(const WeightedGraph& graph, int nu,
                                     const MinimizeOptions& opts = {},
                                     int vertex_cap = kDefaultVertexCap);

}  // namespace spl
