#include "spl/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spl/error.hpp"

namespace spl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DisconnectedComponent: return "DisconnectedComponent";
    case ErrorKind::EmptyComponent: return "EmptyComponent";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotAClosedWalk: return "NotAClosedWalk";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::AllZeroVector: return "AllZeroVector";
    case ErrorKind::CourantViolation: return "CourantViolation";
    case ErrorKind::ZeroAlpha: return "ZeroAlpha";
    case ErrorKind::DegenerateBlock: return "DegenerateBlock";
    case ErrorKind::WrongNodalPartition: return "WrongNodalPartition";
    case ErrorKind::DegenerateEigenvector: return "DegenerateEigenvector";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::LeftPositiveOrthant: return "LeftPositiveOrthant";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::DegenerateHessian: return "DegenerateHessian";
    case ErrorKind::RetractionFailure: return "RetractionFailure";
    case ErrorKind::DegenerateSegment: return "DegenerateSegment";
    case ErrorKind::ClassificationAmbiguous: return "ClassificationAmbiguous";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::MismatchAt: return "MismatchAt";
    case ErrorKind::SuiteFailed: return "SuiteFailed";
  }
  return "Unknown";
}

struct WeightedGraph::Data {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Incidence>> adjacency;
  std::vector<double> degree;
};

namespace {

std::shared_ptr<WeightedGraph::Data> assemble(int n, std::vector<Edge> edges) {
  auto d = std::make_shared<WeightedGraph::Data>();
  d->n = n;
  d->edges = std::move(edges);
  d->adjacency.assign(n, {});
  d->degree.assign(n, 0.0);
  for (int e = 0; e < static_cast<int>(d->edges.size()); ++e) {
    const Edge& ed = d->edges[e];
    d->adjacency[ed.i].push_back({ed.j, e});
    d->adjacency[ed.j].push_back({ed.i, e});
    d->degree[ed.i] += ed.w;
    d->degree[ed.j] += ed.w;
  }
  for (auto& adj : d->adjacency) {
    std::sort(adj.begin(), adj.end(),
              [](const Incidence& a, const Incidence& b) { return a.vertex < b.vertex; });
  }
  return d;
}

}  // namespace

WeightedGraph WeightedGraph::build(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 1) {
    throw Error(ErrorKind::InvalidInput, "vertex count must be positive");
  }
  if (edges.empty()) {
    throw Error(ErrorKind::InvalidInput, "edge list is empty");
  }
  for (Edge& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= vertex_count || e.j >= vertex_count) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                      ") references a vertex outside [0," + std::to_string(vertex_count) + ")");
    }
    if (e.i == e.j) {
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.i));
    }
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw Error(ErrorKind::NonPositiveWeight,
                  "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                      ") has non-positive weight");
    }
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k].i == edges[k - 1].i && edges[k].j == edges[k - 1].j) {
      throw Error(ErrorKind::DuplicateEdge, "duplicate edge (" + std::to_string(edges[k].i) +
                                                "," + std::to_string(edges[k].j) + ")");
    }
  }
  auto data = assemble(vertex_count, std::move(edges));
  WeightedGraph g(data);

  std::vector<char> all_v(vertex_count, 1);
  std::vector<char> all_e(g.edge_count(), 1);
  std::vector<int> labels;
  if (component_labels(g, all_v, all_e, labels) != 1) {
    throw Error(ErrorKind::Disconnected, "graph is not connected");
  }
  return g;
}

int WeightedGraph::vertex_count() const { return d_->n; }
int WeightedGraph::edge_count() const { return static_cast<int>(d_->edges.size()); }
std::span<const Edge> WeightedGraph::edges() const { return d_->edges; }
const Edge& WeightedGraph::edge(int id) const { return d_->edges[id]; }

std::optional<int> WeightedGraph::find_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(d_->edges.begin(), d_->edges.end(), Edge{a, b, 0.0},
                             [](const Edge& x, const Edge& y) {
                               return x.i != y.i ? x.i < y.i : x.j < y.j;
                             });
  if (it != d_->edges.end() && it->i == a && it->j == b) {
    return static_cast<int>(it - d_->edges.begin());
  }
  return std::nullopt;
}

std::span<const Incidence> WeightedGraph::neighbors(int v) const { return d_->adjacency[v]; }
double WeightedGraph::degree(int v) const { return d_->degree[v]; }

WeightedGraph WeightedGraph::with_weights(std::span<const double> weights) const {
  if (static_cast<int>(weights.size()) != edge_count()) {
    throw Error(ErrorKind::InvalidInput, "weight vector does not match edge count");
  }
  std::vector<Edge> edges = d_->edges;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!(weights[e] > 0.0) || !std::isfinite(weights[e])) {
      throw Error(ErrorKind::NonPositiveWeight, "replacement weight is not positive");
    }
    edges[e].w = weights[e];
  }
  return WeightedGraph(assemble(d_->n, std::move(edges)));
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.d_ == b.d_) return true;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (int e = 0; e < a.edge_count(); ++e) {
    const Edge& x = a.edge(e);
    const Edge& y = b.edge(e);
    if (x.i != y.i || x.j != y.j || x.w != y.w) return false;
  }
  return true;
}

int component_labels(const WeightedGraph& graph, std::span<const char> keep_vertex,
                     std::span<const char> keep_edge, std::vector<int>& labels) {
  const int n = graph.vertex_count();
  labels.assign(n, -1);
  std::vector<int> stack;
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (!keep_vertex[s] || labels[s] >= 0) continue;
    labels[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : graph.neighbors(v)) {
        if (!keep_edge[inc.edge] || !keep_vertex[inc.vertex] || labels[inc.vertex] >= 0) continue;
        labels[inc.vertex] = count;
        stack.push_back(inc.vertex);
      }
    }
    ++count;
  }
  return count;
}

Partition make_partition(const WeightedGraph& graph, std::vector<int> labels) {
  const int n = graph.vertex_count();
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorKind::InvalidInput, "label count " + std::to_string(labels.size()) +
                                             " does not match vertex count " + std::to_string(n));
  }
  int nu = 0;
  for (int l : labels) {
    if (l < 0) throw Error(ErrorKind::InvalidInput, "negative component label");
    nu = std::max(nu, l + 1);
  }

  Partition p;
  p.graph_ = graph;
  p.components_.assign(nu, {});
  p.local_.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    p.local_[v] = static_cast<int>(p.components_[labels[v]].size());
    p.components_[labels[v]].push_back(v);
  }
  for (int k = 0; k < nu; ++k) {
    if (p.components_[k].empty()) {
      throw Error(ErrorKind::EmptyComponent, "component label " + std::to_string(k) + " is unused");
    }
  }

  const int m = graph.edge_count();
  p.boundary_mask_.assign(m, 0);
  p.boundary_pos_.assign(m, -1);
  std::vector<char> internal(m, 0);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = graph.edge(e);
    if (labels[ed.i] != labels[ed.j]) {
      p.boundary_mask_[e] = 1;
      p.boundary_pos_[e] = static_cast<int>(p.boundary_.size());
      p.boundary_.push_back(e);
    } else {
      internal[e] = 1;
    }
  }

  std::vector<char> all_v(n, 1);
  std::vector<int> pieces;
  if (component_labels(graph, all_v, internal, pieces) != nu) {
    for (int k = 0; k < nu; ++k) {
      const int first = pieces[p.components_[k].front()];
      for (int v : p.components_[k]) {
        if (pieces[v] != first) {
          throw Error(ErrorKind::DisconnectedComponent,
                      "component " + std::to_string(k) + " is not connected");
        }
      }
    }
  }
  p.labels_ = std::move(labels);
  return p;
}

std::vector<int> canonical_labels(std::span<const int> labels) {
  std::vector<int> remap;
  std::vector<int> out(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const int l = labels[v];
    if (l >= static_cast<int>(remap.size())) remap.resize(l + 1, -1);
    if (remap[l] < 0) {
      remap[l] = static_cast<int>(std::count_if(remap.begin(), remap.end(),
                                                [](int r) { return r >= 0; }));
    }
    out[v] = remap[l];
  }
  return out;
}

bool same_partition(const Partition& a, const Partition& b) {
  if (!(a.graph() == b.graph())) return false;
  return canonical_labels(a.labels()) == canonical_labels(b.labels());
}

PartitionMultigraph partition_multigraph(const Partition& partition) {
  PartitionMultigraph mg;
  mg.node_count = partition.size();
  const WeightedGraph& g = partition.graph();
  mg.component_of_vertex.assign(partition.labels().begin(), partition.labels().end());
  for (int e : partition.boundary()) {
    const Edge& ed = g.edge(e);
    mg.edges.push_back({partition.component_of(ed.i), partition.component_of(ed.j), e});
  }
  return mg;
}

int betti_number(const Partition& partition) {
  return static_cast<int>(partition.boundary().size()) - (partition.size() - 1);
}

bool is_bipartite_partition(const Partition& partition) {
  const PartitionMultigraph mg = partition_multigraph(partition);
  std::vector<std::vector<int>> adj(mg.node_count);
  for (const auto& e : mg.edges) {
    adj[e.k].push_back(e.l);
    adj[e.l].push_back(e.k);
  }
  std::vector<int> color(mg.node_count, -1);
  std::vector<int> queue;
  for (int s = 0; s < mg.node_count; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      for (int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_tree_partition(const Partition& partition) {
  // P^G is connected whenever G is, so acyclicity is an edge count.
  return betti_number(partition) == 0;
}

void for_each_partition(const WeightedGraph& graph, int nu,
                        const std::function<void(const Partition&)>& visit, int vertex_cap) {
  const int n = graph.vertex_count();
  if (n > vertex_cap) {
    throw Error(ErrorKind::CapExceeded, "partition enumeration is capped at " +
                                            std::to_string(vertex_cap) + " vertices, graph has " +
                                            std::to_string(n));
  }
  if (nu < 1 || nu > n) return;

  // Restricted growth strings with exactly nu blocks, in lexicographic order.
  std::vector<int> labels(n, 0);
  std::vector<int> internal_scratch;
  std::vector<char> all_v(n, 1);
  std::vector<char> internal(graph.edge_count(), 0);

  auto connected_blocks = [&]() {
    for (int e = 0; e < graph.edge_count(); ++e) {
      const Edge& ed = graph.edge(e);
      internal[e] = labels[ed.i] == labels[ed.j];
    }
    return component_labels(graph, all_v, internal, internal_scratch) == nu;
  };

  std::function<void(int, int)> extend = [&](int v, int used) {
    if (used + (n - v) < nu) return;
    if (v == n) {
      if (used == nu && connected_blocks()) visit(make_partition(graph, labels));
      return;
    }
    const int top = std::min(used, nu - 1);
    for (int l = 0; l <= top; ++l) {
      labels[v] = l;
      extend(v + 1, std::max(used, l + 1));
    }
  };
  labels[0] = 0;
  extend(1, 1);
}

std::vector<Partition> enumerate_partitions(const WeightedGraph& graph, int nu, int vertex_cap) {
  std::vector<Partition> out;
  for_each_partition(graph, nu, [&](const Partition& p) { out.push_back(p); }, vertex_cap);
  return out;
}

}  // namespace spl
