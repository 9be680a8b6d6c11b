#include <functional>

#include "doctest.h"
#include "spl/bounds.hpp"
#include "spl/critical.hpp"
#include "spl/error.hpp"
#include "spl/io.hpp"
#include "support.hpp"

using namespace spl;
using namespace spl::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an spl::Error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("graph and partition round trips") {
  const WeightedGraph g = path3(1, 2.5);
  const Json j = graph_to_json(g);
  CHECK(j["vertices"] == 3);
  CHECK(graph_from_json(j) == g);

  const Partition p = make_partition(g, {0, 0, 1});
  const Partition q = partition_from_json(g, partition_to_json(p));
  CHECK(same_partition(p, q));

  const Signature s(triangle(), {0, 2});
  CHECK(signature_from_json(triangle(), signature_to_json(s)) == s);

  const Partition tri = make_partition(triangle(), {0, 1, 2});
  const ParamPoint a{{0.5, 2.0, 1.25}};
  CHECK(param_point_from_json(tri, param_point_to_json(tri, a)).alpha == a.alpha);
}

TEST_CASE("malformed input") {
  CHECK(kind_of([] { parse_json("{oops"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { graph_from_json(parse_json(R"({"vertices": 3})")); }) ==
        ErrorKind::ParseError);
  CHECK(graph_from_json(parse_json(R"({"vertices": 2, "edges": [[0, 1]]})")).edges()[0].w == 1.0);
  CHECK(kind_of([] { graph_from_json(parse_json(R"({"vertices": 2, "edges": [[0, 1, 1, 1]]})")); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] {
          graph_from_json(parse_json(R"({"vertices": 3, "edges": [[0, 1, 1]]})"));
        }) == ErrorKind::Disconnected);
  CHECK(kind_of([] { partition_from_json(triangle(), parse_json(R"({"labels": [0, 1]})")); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] {
          signature_from_json(triangle(), parse_json(R"({"negative_edges": [[0, 7]]})"));
        }) != ErrorKind::InvalidInput);
  CHECK(kind_of([] { read_json_file("/nonexistent/graph.json"); }) == ErrorKind::ParseError);
}

TEST_CASE("eigenvalue formatting") {
  CHECK(format_eigenvalue(4.0) == "4");
  CHECK(format_eigenvalue(-0.0) == "0");
  CHECK(format_eigenvalue(-1.6e-17, 3.0) == "0");
  CHECK(format_eigenvalue(0.9999999999999991) == "1");
  CHECK(format_eigenvalue(1.2679491924311228) == "1.26794919243");
}

TEST_CASE("reports") {
  const Partition tri = make_partition(triangle(), {0, 1, 2});
  const CriticalPoint cp = critical_points_from_spectrum(tri).at(0);
  const Json j = critical_point_to_json(tri, cp);
  CHECK(j["eigen_index"] == 3);
  CHECK(j["deficiency"] == 0);
  CHECK(j["alpha"].size() == 3);
  CHECK(j["certificate_c"].size() == 3);

  const Json spec = spectrum_to_json(eigendecompose(signed_laplacian(Signature::all_negative(triangle()))));
  CHECK(spec["eigenvalues"] == Json::array({"1", "1", "4"}));
  CHECK(spec["simple"] == Json::array({false, false, true}));

  const std::string err = dump_json(error_to_json("ParseError", "bad"));
  CHECK(err.find("\"error\": \"ParseError\"") != std::string::npos);
  CHECK(err.back() == '\n');
}

TEST_CASE("DOT export") {
  Eigen::VectorXd u(5);
  u << 0, 1, 1, -1, -1;
  const Signature s = Signature::all_positive(star(4));
  const std::string dot = nodal_dot(s, u, nodal_report(s, u));
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("0 [label=\"0\"") != std::string::npos);  // zero vertex has no sign
  CHECK(dot.find("1 [label=\"1 +\"") != std::string::npos);

  const std::string pd = partition_dot(make_partition(path3(), {0, 0, 1}));
  CHECK(pd.find("1 -- 2") != std::string::npos);
  CHECK(pd.find("dashed") != std::string::npos);
}
