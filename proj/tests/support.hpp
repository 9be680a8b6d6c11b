#pragma once

#include <cmath>
#include <vector>

#include "spl/graph.hpp"

namespace spl::testing {

inline WeightedGraph triangle(double w = 1.0) {
  return WeightedGraph::build(3, {{0, 1, w}, {1, 2, w}, {0, 2, w}});
}

// 0 - 1 - 2 with weights (w01, w12).
inline WeightedGraph path3(double w01 = 1.0, double w12 = 1.0) {
  return WeightedGraph::build(3, {{0, 1, w01}, {1, 2, w12}});
}

inline WeightedGraph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back({0, v, 1.0});
  return WeightedGraph::build(leaves + 1, e);
}

inline WeightedGraph cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n, 1.0});
  return WeightedGraph::build(n, e);
}

// Three triangles {0,1,2}, {3,4,5}, {6,7,8} joined by four edges: one between
// the first and second, one between the second and third, two between the
// first and third.
inline WeightedGraph three_triangles() {
  return WeightedGraph::build(9, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1},
                                  {3, 4, 1}, {4, 5, 1}, {3, 5, 1},
                                  {6, 7, 1}, {7, 8, 1}, {6, 8, 1},
                                  {1, 5, 1}, {5, 6, 1}, {1, 6, 1}, {2, 8, 1}});
}

inline std::vector<int> three_triangle_labels() { return {0, 0, 0, 1, 1, 1, 2, 2, 2}; }

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace spl::testing
