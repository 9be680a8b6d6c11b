#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spl/bounds.hpp"
#include "spl/critical.hpp"
#include "spl/graph.hpp"

namespace spl {

// Data-parallel sweeps. Each has an OpenMP version and a `_serial`
// reference; both return results in the same order, so outputs are
// identical whatever the thread count.

/// λ_ν(Γ) for every Γ ⊆ ∂P, indexed by bitmask over boundary positions.
std::vector<double> subset_lambda_values(const Partition& partition);
std::vector<double> subset_lambda_values_serial(const Partition& partition);

/// minimize_energy on each partition.
std::vector<EnergyEstimate> partition_energy_estimates(std::span<const Partition> partitions,
                                                       const MinimizeOptions& opts = {});
std::vector<EnergyEstimate> partition_energy_estimates_serial(
    std::span<const Partition> partitions, const MinimizeOptions& opts = {});

struct CriticalSweepEntry {
  int partition_index = 0;
  CriticalPoint point;
  std::optional<MorseResult> morse;
  std::string morse_error;  // error kind name when the Hessian step refused
  std::optional<RestorationReport> restoration;
  std::string restoration_error;
};

/// Critical points of every partition, with Morse index, certificate and
/// edge-restoration prediction wherever the partition has η ≥ 1.
std::vector<CriticalSweepEntry> critical_sweep(std::span<const Partition> partitions,
                                               const Tolerances& tol = {});
std::vector<CriticalSweepEntry> critical_sweep_serial(std::span<const Partition> partitions,
                                                      const Tolerances& tol = {});

}  // namespace spl
