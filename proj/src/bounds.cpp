#include "spl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spl/critical.hpp"
#include "spl/error.hpp"
#include "spl/kernels.hpp"
#include "spl/random.hpp"
#include "spl/spectral.hpp"

namespace spl {

namespace {

void check_cap(const Partition& partition, int subset_cap) {
  const int b = static_cast<int>(partition.boundary().size());
  if (b > subset_cap) {
    throw Error(ErrorKind::CapExceeded, "boundary has " + std::to_string(b) +
                                            " edges, above the subset cap of " +
                                            std::to_string(subset_cap));
  }
}

std::vector<int> subset_edges(const Partition& partition, std::uint64_t mask) {
  std::vector<int> out;
  const auto boundary = partition.boundary();
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    if ((mask >> k) & 1u) out.push_back(boundary[k]);
  }
  return out;
}

// Indicator vectors compare lexicographically from position 0, which is the
// integer order of the bit-reversed mask.
bool lex_greater(std::uint64_t a, std::uint64_t b, int width) {
  for (int k = 0; k < width; ++k) {
    const bool ba = (a >> k) & 1u;
    const bool bb = (b >> k) & 1u;
    if (ba != bb) return ba;
  }
  return false;
}

// Gradient descent of mean Φ along the equipartition manifold, in log
// coordinates, from a point already on it. Returns the last accepted point.
ParamPoint descend_on_manifold(const Partition& partition, ParamPoint alpha, int max_steps) {
  double t = 1.0;
  double f = phi(partition, alpha).mean();
  for (int step = 0; step < max_steps; ++step) {
    const ManifoldFrame frame = manifold_frame(partition, alpha);
    if (frame.tangent.cols() == 0) break;
    const Eigen::VectorXd grad_full = alpha.as_vector().cwiseProduct(
        phi_jacobian(partition, alpha).colwise().mean().transpose());
    const Eigen::VectorXd g = frame.tangent.transpose() * grad_full;
    const double gn2 = g.squaredNorm();
    if (std::sqrt(gn2) < 1e-10) break;
    t = std::min(1.0, 2.0 * t);
    bool moved = false;
    while (t > 1e-14) {
      try {
        const ParamPoint cand = retract(
            partition, shift_log(alpha, -t * (frame.tangent * g)), frame.normal, 1e-12);
        const double fc = phi(partition, cand).mean();
        if (fc <= f - 1e-4 * t * gn2) {
          alpha = cand;
          f = fc;
          moved = true;
          break;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::RetractionFailure) throw;
      }
      t *= 0.5;
    }
    if (!moved) break;
  }
  return alpha;
}

}  // namespace

bool homologous(const WeightedGraph& graph, std::span<const int> gamma1,
                std::span<const int> gamma2) {
  BitVector d = BitVector::from_indices(graph.edge_count(), gamma1);
  d ^= BitVector::from_indices(graph.edge_count(), gamma2);
  return in_cut_space(chain_space(graph), d);
}

std::optional<std::vector<int>> partition_class_membership(const Partition& partition,
                                                           std::span<const int> gamma,
                                                           int subset_cap) {
  check_cap(partition, subset_cap);
  const WeightedGraph& g = partition.graph();
  const BitVector target = BitVector::from_indices(g.edge_count(), gamma);

  // Propagate x through each component along internal edges, root bit 0.
  const int n = g.vertex_count();
  std::vector<char> x(n, 0), seen(n, 0);
  for (int k = 0; k < partition.size(); ++k) {
    const int root = partition.component(k)[0];
    std::vector<int> queue{root};
    seen[root] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int u = queue[q];
      for (const Incidence& inc : g.neighbors(u)) {
        if (partition.is_boundary(inc.edge)) continue;
        const char want = static_cast<char>(x[u] ^ (target.get(inc.edge) ? 1 : 0));
        if (!seen[inc.vertex]) {
          seen[inc.vertex] = 1;
          x[inc.vertex] = want;
          queue.push_back(inc.vertex);
        } else if (x[inc.vertex] != want) {
          return std::nullopt;
        }
      }
    }
  }
  BitVector tilde = target;
  tilde ^= coboundary(g, x);
  return tilde.indices();
}

std::optional<std::vector<int>> partition_class_membership_exhaustive(
    const Partition& partition, std::span<const int> gamma, int subset_cap) {
  check_cap(partition, subset_cap);
  const WeightedGraph& g = partition.graph();
  const ChainSpace space = chain_space(g);
  EchelonBasis cuts(g.edge_count());
  for (const auto& c : space.cut_basis) cuts.insert(c);
  const BitVector target = BitVector::from_indices(g.edge_count(), gamma);
  const std::uint64_t count = std::uint64_t{1} << partition.boundary().size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const std::vector<int> subset = subset_edges(partition, mask);
    BitVector d = BitVector::from_indices(g.edge_count(), subset);
    d ^= target;
    if (cuts.contains(d)) return subset;
  }
  return std::nullopt;
}

double lambda_nu(const Signature& sigma, int nu) {
  const int n = sigma.graph().vertex_count();
  if (nu < 1 || nu > n) throw Error(ErrorKind::InvalidInput, "index out of range");
  return eigendecompose(signed_laplacian(sigma)).value(nu);
}

EnergyEstimate minimize_energy(const Partition& partition, const MinimizeOptions& opts) {
  EnergyEstimate best;
  best.energy = std::numeric_limits<double>::infinity();
  auto consider = [&](const ParamPoint& a, double e, bool critical) {
    if (e < best.energy) {
      best.alpha = a;
      best.energy = e;
      best.from_critical_seed = critical;
    }
  };

  if (partition.boundary().empty()) {
    consider(ParamPoint{}, energy(partition, ParamPoint{}), false);
    return best;
  }

  for (const CriticalPoint& cp : critical_points_from_spectrum(partition)) {
    consider(cp.alpha, energy(partition, cp.alpha), true);
  }

  SplitMix64 rng(opts.seed);
  const std::size_t b = partition.boundary().size();
  for (int s = 0; s < opts.starts; ++s) {
    ParamPoint start;
    for (std::size_t k = 0; k < b; ++k) start.alpha.push_back(std::exp(rng.uniform(-1.5, 1.5)));
    consider(start, energy(partition, start), false);
    try {
      ParamPoint on = solve_equipartition(partition, start);
      consider(on, energy(partition, on), false);
      on = descend_on_manifold(partition, on, opts.max_steps);
      consider(on, energy(partition, on), false);
    } catch (const Error&) {
      // This start only contributes its own energy.
    }
  }
  return best;
}

BoundReport lower_bound_check(const Signature& sigma, const Partition& partition,
                              const MinimizeOptions& opts, int subset_cap) {
  if (!(sigma.graph() == partition.graph())) {
    throw Error(ErrorKind::InvalidInput, "signature and partition live on different graphs");
  }
  BoundReport r;
  r.gamma.assign(sigma.negative_edges().begin(), sigma.negative_edges().end());
  auto witness = partition_class_membership(partition, r.gamma, subset_cap);
  if (!witness) {
    throw Error(ErrorKind::NotInClass,
                "no subset of the partition boundary is switching equivalent to the signature");
  }
  r.witness_subset = *witness;
  const int nu = partition.size();
  const SpectrumReport spec = eigendecompose(signed_laplacian(sigma));
  r.lambda_nu = spec.value(nu);
  const EnergyEstimate est = minimize_energy(partition, opts);
  r.inf_energy_estimate = est.energy;
  r.best_alpha = est.alpha;
  r.slack = r.inf_energy_estimate - r.lambda_nu;
  if (r.slack <= 1e-8 && spec.is_simple(nu)) {
    const auto nodal = nodal_partition(sigma, spec.vector(nu));
    r.equality_case = nodal && same_partition(*nodal, partition);
  }
  return r;
}

MaxLowerBound maximize_lower_bound(const Partition& partition, int subset_cap) {
  check_cap(partition, subset_cap);
  const std::vector<double> values = subset_lambda_values(partition);
  const int width = static_cast<int>(partition.boundary().size());
  double top = -std::numeric_limits<double>::infinity();
  for (double v : values) top = std::max(top, v);
  const double cut = top - 1e-10 * std::max(1.0, std::abs(top));
  std::uint64_t chosen = 0;
  bool have = false;
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    if (values[mask] < cut) continue;
    if (!have || lex_greater(mask, chosen, width)) {
      chosen = mask;
      have = true;
    }
  }
  return {subset_edges(partition, chosen), values[chosen]};
}

EnumerationMinimum enumerate_minimum(const WeightedGraph& graph, int nu,
                                     const MinimizeOptions& opts, int vertex_cap) {
  EnumerationMinimum out;
  out.partitions = enumerate_partitions(graph, nu, vertex_cap);
  out.estimates = partition_energy_estimates(out.partitions, opts);
  for (std::size_t k = 0; k < out.estimates.size(); ++k) {
    if (out.best < 0 || out.estimates[k].energy < out.estimates[out.best].energy) {
      out.best = static_cast<int>(k);
    }
  }
  const Signature plain = Signature::all_positive(graph);
  const SpectrumReport spec = eigendecompose(signed_laplacian(plain));
  out.lambda_nu = spec.value(nu);
  if (is_nondegenerate(spec, nu)) {
    const auto nodal = nodal_partition(plain, spec.vector(nu));
    if (nodal && nodal->size() == nu) {
      out.courant_sharp = true;
      for (std::size_t k = 0; k < out.partitions.size(); ++k) {
        if (same_partition(out.partitions[k], *nodal)) out.nodal_partition = static_cast<int>(k);
      }
    }
  }
  return out;
}

}  // namespace spl
