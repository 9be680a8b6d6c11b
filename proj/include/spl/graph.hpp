#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace spl {

/// Undirected weighted edge, stored canonically with i < j.
struct Edge {
  int i = 0;
  int j = 0;
  double w = 1.0;
};

struct Incidence {
  int vertex;
  int edge;
};

/// Finite, simple, connected graph with strictly positive weights.
///
/// Immutable. Copies share the underlying storage, so passing graphs by value
/// is cheap. Edges are sorted lexicographically by (i, j); an edge's position
/// in that order is its id everywhere else in the library.
class WeightedGraph {
 public:
  /// Validates and canonicalizes the edge list. Pairs given as (j, i) are
  /// flipped. Throws spl::Error with DuplicateEdge, SelfLoop,
  /// NonPositiveWeight, VertexOutOfRange, Disconnected or InvalidInput.
  static WeightedGraph build(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const;
  int edge_count() const;
  std::span<const Edge> edges() const;
  const Edge& edge(int id) const;
  std::optional<int> find_edge(int a, int b) const;
  std::span<const Incidence> neighbors(int v) const;
  double degree(int v) const;

  /// Same topology with replaced weights (aligned with edge ids).
  WeightedGraph with_weights(std::span<const double> weights) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

  struct Data;  // opaque

 private:
  friend class Partition;
  WeightedGraph() = default;
  explicit WeightedGraph(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A ν-partition: connected induced components plus the boundary edge set.
class Partition {
 public:
  const WeightedGraph& graph() const { return graph_; }
  int size() const { return static_cast<int>(components_.size()); }
  std::span<const int> labels() const { return labels_; }
  int component_of(int v) const { return labels_[v]; }
  /// Position of v inside its component's sorted vertex list.
  int local_index(int v) const { return local_[v]; }
  std::span<const int> component(int k) const { return components_[k]; }
  /// Boundary edge ids, ascending.
  std::span<const int> boundary() const { return boundary_; }
  bool is_boundary(int edge) const { return boundary_mask_[edge] != 0; }
  /// Position of a boundary edge inside boundary(), or -1.
  int boundary_position(int edge) const { return boundary_pos_[edge]; }

 private:
  friend Partition make_partition(const WeightedGraph&, std::vector<int>);
  Partition() = default;

  WeightedGraph graph_;
  std::vector<int> labels_;
  std::vector<int> local_;
  std::vector<std::vector<int>> components_;
  std::vector<int> boundary_;
  std::vector<char> boundary_mask_;
  std::vector<int> boundary_pos_;
};

/// Labels must use every value in {0, ..., ν-1}. Throws EmptyComponent on a
/// gap and DisconnectedComponent if some component's induced subgraph is not
/// connected.
Partition make_partition(const WeightedGraph& graph, std::vector<int> labels);

/// Relabels components by first occurrence: the component of vertex 0 becomes
/// 0, the next new component seen becomes 1, and so on.
std::vector<int> canonical_labels(std::span<const int> labels);

bool same_partition(const Partition& a, const Partition& b);

struct MultigraphEdge {
  int k;
  int l;
  int source_edge;
};

/// The partition multigraph: one node per component, one edge per boundary
/// edge (parallel edges kept).
struct PartitionMultigraph {
  int node_count = 0;
  std::vector<MultigraphEdge> edges;
  std::vector<int> component_of_vertex;
};

PartitionMultigraph partition_multigraph(const Partition& partition);

/// First Betti number of the multigraph: |∂P| - (ν - 1).
int betti_number(const Partition& partition);
bool is_bipartite_partition(const Partition& partition);
bool is_tree_partition(const Partition& partition);

inline constexpr int kDefaultVertexCap = 12;

/// Visits every partition into exactly nu connected components, each once,
/// in lexicographic order of canonical labels. Throws CapExceeded when the
/// graph has more than vertex_cap vertices.
void for_each_partition(const WeightedGraph& graph, int nu,
                        const std::function<void(const Partition&)>& visit,
                        int vertex_cap = kDefaultVertexCap);

std::vector<Partition> enumerate_partitions(const WeightedGraph& graph, int nu,
                                            int vertex_cap = kDefaultVertexCap);

/// Connected components of the subgraph that keeps vertices with
/// keep_vertex[v] != 0 and edges with keep_edge[e] != 0. Dropped vertices get
/// label -1. Labels are in first-occurrence order. Returns the count.
int component_labels(const WeightedGraph& graph, std::span<const char> keep_vertex,
                     std::span<const char> keep_edge, std::vector<int>& labels);

}  // namespace spl
