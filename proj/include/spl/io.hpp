#pragma once

#include <string>

#include <Eigen/Dense>
#include "json.hpp"

#include "spl/bounds.hpp"
#include "spl/critical.hpp"
#include "spl/graph.hpp"
#include "spl/param_partition.hpp"
#include "spl/signed.hpp"
#include "spl/spectral.hpp"

namespace spl {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws ParseError.
Json read_json_file(const std::string& path);
/// Parses text. Throws ParseError.
Json parse_json(const std::string& text);
/// Two-space indented text with a trailing newline. Doubles are printed as
/// the shortest decimal string that round-trips.
std::string dump_json(const Json& j);

/// {"vertices": N, "edges": [[i, j, w], ...]}
WeightedGraph graph_from_json(const Json& j);
Json graph_to_json(const WeightedGraph& graph);

/// {"labels": [k_0, ..., k_{N-1}]}
Partition partition_from_json(const WeightedGraph& graph, const Json& j);
Json partition_to_json(const Partition& partition);

/// {"negative_edges": [[i, j], ...]}
Signature signature_from_json(const WeightedGraph& graph, const Json& j);
Json signature_to_json(const Signature& sigma);

/// Edge ids as [[i, j], ...].
Json edge_list_json(const WeightedGraph& graph, std::span<const int> edges);

/// {"alpha": {"i-j": value, ...}} keyed by canonical edge strings.
ParamPoint param_point_from_json(const Partition& partition, const Json& j);
Json param_point_to_json(const Partition& partition, const ParamPoint& point);

/// Twelve significant digits; values within 1e-12·scale of zero print as 0.
std::string format_eigenvalue(double x, double scale = 1.0);

Json spectrum_to_json(const SpectrumReport& report, double gap_rel = 1e-8);
Json nodal_to_json(const WeightedGraph& graph, const NodalReport& report);
Json critical_point_to_json(const Partition& partition, const CriticalPoint& point);
Json restoration_to_json(const WeightedGraph& graph, const RestorationReport& report);
Json bound_report_to_json(const WeightedGraph& graph, const BoundReport& report);
Json error_to_json(const std::string& kind, const std::string& message);

/// Graphviz rendering of a vector's nodal structure: nodal edges dashed,
/// domains colored, zero vertices drawn without a sign.
std::string nodal_dot(const Signature& sigma, const Eigen::VectorXd& u, const NodalReport& report);
/// Partition rendering with boundary edges dashed.
std::string partition_dot(const Partition& partition);

}  // namespace spl
