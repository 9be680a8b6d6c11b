#include "spl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "spl/error.hpp"

namespace spl {

namespace {

[[noreturn]] void bad_shape(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad_shape(std::string(what) + " must be an integer");
  return j.get<int>();
}

double as_double(const Json& j, const char* what) {
  if (!j.is_number()) bad_shape(std::string(what) + " must be a number");
  return j.get<double>();
}

std::string edge_key(const Edge& e) { return std::to_string(e.i) + "-" + std::to_string(e.j); }

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                          "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

WeightedGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    bad_shape("graph needs \"vertices\" and \"edges\"");
  }
  const int n = as_int(j["vertices"], "vertices");
  if (!j["edges"].is_array()) bad_shape("edges must be an array");
  std::vector<Edge> edges;
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) bad_shape("edge must be [i, j] or [i, j, w]");
    Edge ed{as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"),
            e.size() == 3 ? as_double(e[2], "edge weight") : 1.0};
    edges.push_back(ed);
  }
  return WeightedGraph::build(n, std::move(edges));
}

Json graph_to_json(const WeightedGraph& graph) {
  Json edges = Json::array();
  for (const Edge& e : graph.edges()) edges.push_back(Json::array({e.i, e.j, e.w}));
  return Json{{"vertices", graph.vertex_count()}, {"edges", edges}};
}

Partition partition_from_json(const WeightedGraph& graph, const Json& j) {
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array()) {
    bad_shape("partition needs a \"labels\" array");
  }
  std::vector<int> labels;
  for (const Json& k : j["labels"]) labels.push_back(as_int(k, "label"));
  return make_partition(graph, std::move(labels));
}

Json partition_to_json(const Partition& partition) {
  return Json{{"labels", std::vector<int>(partition.labels().begin(), partition.labels().end())}};
}

Signature signature_from_json(const WeightedGraph& graph, const Json& j) {
  if (!j.is_object() || !j.contains("negative_edges") || !j["negative_edges"].is_array()) {
    bad_shape("signature needs a \"negative_edges\" array");
  }
  std::vector<int> ids;
  for (const Json& e : j["negative_edges"]) {
    if (!e.is_array() || e.size() != 2) bad_shape("negative edge must be [i, j]");
    const int a = as_int(e[0], "edge endpoint");
    const int b = as_int(e[1], "edge endpoint");
    if (a < 0 || b < 0 || a >= graph.vertex_count() || b >= graph.vertex_count()) {
      throw Error(ErrorKind::VertexOutOfRange, "negative edge endpoint out of range");
    }
    auto id = graph.find_edge(a, b);
    if (!id) {
      throw Error(ErrorKind::InvalidInput, "(" + std::to_string(a) + "," + std::to_string(b) +
                                               ") is not an edge");
    }
    ids.push_back(*id);
  }
  return Signature(graph, std::move(ids));
}

Json edge_list_json(const WeightedGraph& graph, std::span<const int> edges) {
  Json out = Json::array();
  for (int e : edges) out.push_back(Json::array({graph.edge(e).i, graph.edge(e).j}));
  return out;
}

Json signature_to_json(const Signature& sigma) {
  return Json{{"negative_edges", edge_list_json(sigma.graph(), sigma.negative_edges())}};
}

ParamPoint param_point_from_json(const Partition& partition, const Json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j["alpha"].is_object()) {
    bad_shape("parameter point needs an \"alpha\" object");
  }
  const Json& a = j["alpha"];
  ParamPoint p;
  for (int e : partition.boundary()) {
    const std::string key = edge_key(partition.graph().edge(e));
    if (!a.contains(key)) bad_shape("missing alpha for boundary edge " + key);
    p.alpha.push_back(as_double(a[key], "alpha"));
  }
  if (a.size() != p.alpha.size()) bad_shape("alpha has keys that are not boundary edges");
  return p;
}

Json param_point_to_json(const Partition& partition, const ParamPoint& point) {
  Json a = Json::object();
  const auto boundary = partition.boundary();
  for (std::size_t b = 0; b < boundary.size(); ++b) {
    a[edge_key(partition.graph().edge(boundary[b]))] = point.alpha[b];
  }
  return Json{{"alpha", a}};
}

std::string format_eigenvalue(double x, double scale) {
  if (std::abs(x) <= 1e-12 * std::max(1.0, scale)) x = 0.0;  // also drops -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

Json spectrum_to_json(const SpectrumReport& report, double gap_rel) {
  Json values = Json::array(), simple = Json::array(), vectors = Json::array();
  for (int n = 1; n <= report.size(); ++n) {
    values.push_back(format_eigenvalue(report.value(n), report.operator_norm));
    simple.push_back(report.is_simple(n, gap_rel));
    Eigen::VectorXd v = report.vector(n);
    for (double& x : v) x = x == 0.0 ? 0.0 : x;  // no -0 in output
    vectors.push_back(std::vector<double>(v.data(), v.data() + v.size()));
  }
  return Json{{"eigenvalues", values}, {"simple", simple}, {"eigenvectors", vectors}};
}

Json nodal_to_json(const WeightedGraph& graph, const NodalReport& report) {
  Json j{{"domain_count", report.domain_count},
         {"domains", report.domain_of},
         {"nodal_edges", edge_list_json(graph, report.nodal_edges)},
         {"zero_vertices", report.zero_vertices}};
  j["eigen_index"] = report.eigen_index ? Json(*report.eigen_index) : Json(nullptr);
  j["deficiency"] = report.deficiency ? Json(*report.deficiency) : Json(nullptr);
  return j;
}

Json critical_point_to_json(const Partition& partition, const CriticalPoint& point) {
  Json j{{"alpha", param_point_to_json(partition, point.alpha)["alpha"]},
         {"eigen_index", point.eigen_index},
         {"nu", point.nu},
         {"deficiency", point.deficiency},
         {"energy", point.energy}};
  j["morse_index"] = point.morse_index ? Json(*point.morse_index) : Json(nullptr);
  j["hessian_eigenvalues"] = point.hessian_eigenvalues;
  j["certificate_c"] = point.certificate;
  return j;
}

Json restoration_to_json(const WeightedGraph& graph, const RestorationReport& report) {
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    steps.push_back(Json{{"edge", Json::array({graph.edge(s.edge).i, graph.edge(s.edge).j})},
                         {"alpha", s.alpha},
                         {"index_before", s.index_before},
                         {"kind", s.kind == CurveExtremum::Max ? "max" : "min"}});
  }
  return Json{{"removed_edges", edge_list_json(graph, report.removed_edges)},
              {"tree_index", report.tree_index},
              {"steps", steps},
              {"predicted_index", report.predicted_index},
              {"actual_index", report.actual_index}};
}

Json bound_report_to_json(const WeightedGraph& graph, const BoundReport& report) {
  return Json{{"gamma", edge_list_json(graph, report.gamma)},
              {"lambda_nu", report.lambda_nu},
              {"inf_energy_estimate", report.inf_energy_estimate},
              {"slack", report.slack},
              {"equality_case", report.equality_case},
              {"witness_subset", edge_list_json(graph, report.witness_subset)}};
}

Json error_to_json(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

std::string nodal_dot(const Signature& sigma, const Eigen::VectorXd& u, const NodalReport& report) {
  const WeightedGraph& g = sigma.graph();
  std::ostringstream out;
  out << "graph nodal {\n  node [style=filled];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = report.domain_of[v];
    out << "  " << v << " [label=\"" << v;
    if (d >= 0) out << (u[v] > 0 ? " +" : " -");
    out << "\", fillcolor=\"" << (d >= 0 ? kPalette[d % 10] : "#ffffff") << "\"];\n";
  }
  std::vector<char> nodal(g.edge_count(), 0);
  for (int e : report.nodal_edges) nodal[e] = 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << "  " << ed.i << " -- " << ed.j << " [label=\"" << (sigma.is_negative(e) ? "-" : "+")
        << "\"";
    if (nodal[e]) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string partition_dot(const Partition& partition) {
  const WeightedGraph& g = partition.graph();
  std::ostringstream out;
  out << "graph partition {\n  node [style=filled];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [fillcolor=\"" << kPalette[partition.component_of(v) % 10] << "\"];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << "  " << ed.i << " -- " << ed.j;
    if (partition.is_boundary(e)) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace spl
