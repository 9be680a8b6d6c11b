#include "spl/signed.hpp"

#include <algorithm>
#include <string>

#include "spl/error.hpp"

namespace spl {

Signature::Signature(WeightedGraph graph, std::vector<int> negative_edges)
    : graph_(std::move(graph)), negative_(std::move(negative_edges)) {
  std::sort(negative_.begin(), negative_.end());
  negative_.erase(std::unique(negative_.begin(), negative_.end()), negative_.end());
  mask_.assign(graph_.edge_count(), 0);
  for (int e : negative_) {
    if (e < 0 || e >= graph_.edge_count()) {
      throw Error(ErrorKind::InvalidInput, "negative edge id " + std::to_string(e) +
                                               " is not an edge of the graph");
    }
    mask_[e] = 1;
  }
}

Signature Signature::all_positive(const WeightedGraph& graph) { return Signature(graph, {}); }

Signature Signature::all_negative(const WeightedGraph& graph) {
  std::vector<int> all(graph.edge_count());
  for (int e = 0; e < graph.edge_count(); ++e) all[e] = e;
  return Signature(graph, std::move(all));
}

Signature Signature::from_partition(const Partition& partition) {
  return Signature(partition.graph(),
                   std::vector<int>(partition.boundary().begin(), partition.boundary().end()));
}

Signature Signature::symmetric_difference(const Signature& other) const {
  std::vector<int> out;
  std::set_symmetric_difference(negative_.begin(), negative_.end(), other.negative_.begin(),
                                other.negative_.end(), std::back_inserter(out));
  return Signature(graph_, std::move(out));
}

Signature switch_signature(const Signature& sigma, const SwitchingFunction& tau) {
  const WeightedGraph& g = sigma.graph();
  if (static_cast<int>(tau.tau.size()) != g.vertex_count()) {
    throw Error(ErrorKind::InvalidInput, "switching function must be defined on every vertex");
  }
  std::vector<int> negative;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (tau.tau[ed.i] * sigma.sign(e) * tau.tau[ed.j] < 0) negative.push_back(e);
  }
  return Signature(g, std::move(negative));
}

int cycle_sign(const Signature& sigma, std::span<const int> walk) {
  if (walk.size() < 2 || walk.front() != walk.back()) {
    throw Error(ErrorKind::NotAClosedWalk, "walk does not return to its start");
  }
  int sign = 1;
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
    auto e = sigma.graph().find_edge(walk[k], walk[k + 1]);
    if (!e) {
      throw Error(ErrorKind::NotAClosedWalk, "walk step (" + std::to_string(walk[k]) + "," +
                                                 std::to_string(walk[k + 1]) + ") is not an edge");
    }
    sign *= sigma.sign(*e);
  }
  return sign;
}

std::optional<SwitchingFunction> is_balanced(const Signature& sigma) {
  const WeightedGraph& g = sigma.graph();
  const int n = g.vertex_count();
  std::vector<int> tau(n, 0);
  std::vector<int> queue{0};
  tau[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int u = queue[q];
    for (const Incidence& inc : g.neighbors(u)) {
      if (tau[inc.vertex] != 0) continue;
      tau[inc.vertex] = tau[u] * sigma.sign(inc.edge);
      queue.push_back(inc.vertex);
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (tau[ed.i] * sigma.sign(e) * tau[ed.j] < 0) return std::nullopt;
  }
  return SwitchingFunction{std::move(tau)};
}

std::optional<SwitchingFunction> switching_equivalent(const Signature& s1, const Signature& s2) {
  if (!(s1.graph() == s2.graph())) {
    throw Error(ErrorKind::InvalidInput, "signatures live on different graphs");
  }
  return is_balanced(s1.symmetric_difference(s2));
}

SymOperator signed_laplacian(const Signature& sigma) {
  const WeightedGraph& g = sigma.graph();
  SymOperator L = SymOperator::Zero(g.vertex_count(), g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    L(ed.i, ed.i) += ed.w;
    L(ed.j, ed.j) += ed.w;
    const double off = -sigma.sign(e) * ed.w;
    L(ed.i, ed.j) = off;
    L(ed.j, ed.i) = off;
  }
  return L;
}

SymOperator partition_laplacian(const Partition& partition) {
  return signed_laplacian(Signature::from_partition(partition));
}

SymOperator conjugate_by_switching(const SymOperator& op, const SwitchingFunction& tau) {
  if (static_cast<Eigen::Index>(tau.tau.size()) != op.rows()) {
    throw Error(ErrorKind::InvalidInput, "switching function size does not match operator");
  }
  SymOperator out = op;
  for (Eigen::Index i = 0; i < op.rows(); ++i) {
    for (Eigen::Index j = 0; j < op.cols(); ++j) out(i, j) *= tau.tau[i] * tau.tau[j];
  }
  return out;
}

double signed_quadratic_form(const Signature& sigma, const Eigen::VectorXd& u) {
  double q = 0.0;
  for (int e = 0; e < sigma.graph().edge_count(); ++e) {
    const Edge& ed = sigma.graph().edge(e);
    const double d = u[ed.i] - sigma.sign(e) * u[ed.j];
    q += ed.w * d * d;
  }
  return q;
}

}  // namespace spl
