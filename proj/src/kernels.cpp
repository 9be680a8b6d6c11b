#include "spl/kernels.hpp"

#include <cstdint>
#include <exception>

#include "spl/error.hpp"

namespace spl {

namespace {

double subset_value(const Partition& partition, std::uint64_t mask) {
  std::vector<int> gamma;
  const auto boundary = partition.boundary();
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    if ((mask >> k) & 1u) gamma.push_back(boundary[k]);
  }
  return lambda_nu(Signature(partition.graph(), std::move(gamma)), partition.size());
}

std::vector<CriticalSweepEntry> analyze_partition(const Partition& partition, int index,
                                                  const Tolerances& tol) {
  std::vector<CriticalSweepEntry> out;
  const bool tree = betti_number(partition) == 0;
  for (CriticalPoint& cp : critical_points_from_spectrum(partition, tol)) {
    CriticalSweepEntry entry;
    entry.partition_index = index;
    try {
      cp.certificate = lagrange_certificate(partition, cp);
    } catch (const Error&) {
      // Left empty; the point is still reported.
    }
    if (tree) {
      entry.morse_error = "TreePartition";
    } else {
      try {
        MorseResult m = morse_index(partition, cp, tol);
        cp.morse_index = m.index;
        cp.hessian_eigenvalues = m.hessian_eigenvalues;
        entry.morse = std::move(m);
      } catch (const Error& e) {
        entry.morse_error = to_string(e.kind());
      }
      try {
        entry.restoration = deficiency_via_edge_restoration(partition, cp);
      } catch (const Error& e) {
        entry.restoration_error = to_string(e.kind());
      }
    }
    entry.point = std::move(cp);
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CriticalSweepEntry> flatten(std::vector<std::vector<CriticalSweepEntry>>& parts) {
  std::vector<CriticalSweepEntry> out;
  for (auto& p : parts) {
    for (auto& e : p) out.push_back(std::move(e));
  }
  return out;
}

// Exceptions must not cross an OpenMP region boundary; keep the one from the
// lowest index so the rethrown error does not depend on scheduling.
class FirstError {
 public:
  template <class F>
  void run(std::int64_t k, F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(spl_first_error)
      if (!error_ || k < index_) {
        error_ = std::current_exception();
        index_ = k;
      }
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
  std::int64_t index_ = 0;
};

}  // namespace

std::vector<double> subset_lambda_values(const Partition& partition) {
  const std::int64_t count = std::int64_t{1} << partition.boundary().size();
  std::vector<double> values(static_cast<std::size_t>(count));
  FirstError err;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t mask = 0; mask < count; ++mask) {
    err.run(mask, [&] { values[mask] = subset_value(partition, static_cast<std::uint64_t>(mask)); });
  }
  err.rethrow();
  return values;
}

std::vector<double> subset_lambda_values_serial(const Partition& partition) {
  const std::uint64_t count = std::uint64_t{1} << partition.boundary().size();
  std::vector<double> values(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) values[mask] = subset_value(partition, mask);
  return values;
}

std::vector<EnergyEstimate> partition_energy_estimates(std::span<const Partition> partitions,
                                                       const MinimizeOptions& opts) {
  const auto count = static_cast<std::int64_t>(partitions.size());
  std::vector<EnergyEstimate> out(partitions.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < count; ++k) {
    err.run(k, [&] { out[k] = minimize_energy(partitions[k], opts); });
  }
  err.rethrow();
  return out;
}

std::vector<EnergyEstimate> partition_energy_estimates_serial(
    std::span<const Partition> partitions, const MinimizeOptions& opts) {
  std::vector<EnergyEstimate> out;
  for (const Partition& p : partitions) out.push_back(minimize_energy(p, opts));
  return out;
}

std::vector<CriticalSweepEntry> critical_sweep(std::span<const Partition> partitions,
                                               const Tolerances& tol) {
  const auto count = static_cast<std::int64_t>(partitions.size());
  std::vector<std::vector<CriticalSweepEntry>> parts(partitions.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < count; ++k) {
    err.run(k, [&] { parts[k] = analyze_partition(partitions[k], static_cast<int>(k), tol); });
  }
  err.rethrow();
  return flatten(parts);
}

std::vector<CriticalSweepEntry> critical_sweep_serial(std::span<const Partition> partitions,
                                                      const Tolerances& tol) {
  std::vector<std::vector<CriticalSweepEntry>> parts;
  for (std::size_t k = 0; k < partitions.size(); ++k) {
    parts.push_back(analyze_partition(partitions[k], static_cast<int>(k), tol));
  }
  return flatten(parts);
}

}  // namespace spl
