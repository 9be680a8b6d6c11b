#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spl/bounds.hpp"
#include "spl/critical.hpp"
#include "spl/error.hpp"
#include "spl/ghost.hpp"
#include "spl/io.hpp"
#include "spl/random.hpp"
#include "spl/verify.hpp"

using namespace spl;

namespace {

struct Config {
  std::optional<std::uint64_t> seed;
  int count = 20;
  Tolerances tol;
  int vertex_cap = kDefaultVertexCap;
  int subset_cap = kDefaultSubsetCap;
  bool jitter = false;
  double jitter_rel = 1e-6;
  std::string out;
  std::string dot;

  std::string graph_file;
  std::string signature_file;
  std::string partition_file;
  std::string vector_file;
  std::string suite;
  int index = 1;
  int nu = 2;
  int starts = 16;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::ParseError:
    case ErrorKind::VertexOutOfRange:
    case ErrorKind::DuplicateEdge:
    case ErrorKind::SelfLoop:
    case ErrorKind::NonPositiveWeight:
    case ErrorKind::Disconnected:
    case ErrorKind::DisconnectedComponent:
    case ErrorKind::EmptyComponent:
    case ErrorKind::AllZeroVector:
      return 2;
    case ErrorKind::CapExceeded:
      return 3;
    default:
      return 1;
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  f << text;
}

std::uint64_t seed_or_env(const Config& cfg, bool required) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("SPL_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t v = std::stoull(env, &used, 0);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidInput, "SPL_SEED is not an unsigned integer");
  }
  if (required) throw Error(ErrorKind::InvalidInput, "a seed is required (--seed or SPL_SEED)");
  return 1;
}

WeightedGraph load_graph(const Config& cfg) {
  WeightedGraph g = graph_from_json(read_json_file(cfg.graph_file));
  if (cfg.jitter) {
    SplitMix64 rng(derive_seed(seed_or_env(cfg, false), 0));
    g = jitter_weights(rng, g, cfg.jitter_rel);
  }
  return g;
}

Signature load_signature(const Config& cfg, const WeightedGraph& g) {
  if (cfg.signature_file.empty()) return Signature::all_positive(g);
  return signature_from_json(g, read_json_file(cfg.signature_file));
}

MinimizeOptions minimize_options(const Config& cfg) {
  MinimizeOptions m;
  m.seed = seed_or_env(cfg, false);
  m.starts = cfg.starts;
  return m;
}

int cmd_spectrum(const Config& cfg) {
  const WeightedGraph g = load_graph(cfg);
  const Signature sigma = load_signature(cfg, g);
  Json j = spectrum_to_json(eigendecompose(signed_laplacian(sigma)), cfg.tol.gap_rel);
  write_text(cfg.out, dump_json(j));
  return 0;
}

int cmd_nodal(const Config& cfg) {
  const WeightedGraph g = load_graph(cfg);
  const Signature sigma = load_signature(cfg, g);
  Eigen::VectorXd u;
  int index = cfg.index;
  if (!cfg.vector_file.empty()) {
    const Json j = read_json_file(cfg.vector_file);
    if (!j.is_object() || !j.contains("vector") || !j["vector"].is_array()) {
      throw Error(ErrorKind::ParseError, "vector file needs a \"vector\" array");
    }
    const auto& arr = j["vector"];
    if (static_cast<int>(arr.size()) != g.vertex_count()) {
      throw Error(ErrorKind::InvalidInput, "vector length does not match the vertex count");
    }
    u.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!arr[v].is_number()) throw Error(ErrorKind::ParseError, "vector entries must be numbers");
      u[v] = arr[v].get<double>();
    }
    if (j.contains("index")) index = j["index"].get<int>();
  } else {
    if (index < 1 || index > g.vertex_count()) {
      throw Error(ErrorKind::InvalidInput, "eigen index out of range");
    }
    u = eigendecompose(signed_laplacian(sigma)).vector(index);
  }
  const NodalReport report = nodal_report(sigma, u, index, cfg.tol.zero_tol);
  write_text(cfg.out, dump_json(nodal_to_json(g, report)));
  if (!cfg.dot.empty()) write_text(cfg.dot, nodal_dot(sigma, u, report));
  return 0;
}

int cmd_critical(const Config& cfg) {
  const WeightedGraph g = load_graph(cfg);
  const Partition p = partition_from_json(g, read_json_file(cfg.partition_file));
  const bool tree = is_tree_partition(p);
  Json list = Json::array();
  for (CriticalPoint cp : critical_points_from_spectrum(p, cfg.tol)) {
    std::string morse_error;
    if (!tree) {
      try {
        const MorseResult m = morse_index(p, cp, cfg.tol);
        cp.morse_index = m.index;
        cp.hessian_eigenvalues = m.hessian_eigenvalues;
      } catch (const Error& e) {
        morse_error = to_string(e.kind());
      }
    }
    Json j = critical_point_to_json(p, cp);
    j["courant_sharp"] = cp.eigen_index == p.size();
    if (!morse_error.empty()) j["morse_error"] = morse_error;
    if (!tree) {
      try {
        j["restoration"] = restoration_to_json(g, deficiency_via_edge_restoration(p, cp));
      } catch (const Error& e) {
        j["restoration_error"] = to_string(e.kind());
      }
    }
    list.push_back(std::move(j));
  }
  Json out{{"partition", partition_to_json(p)["labels"]},
           {"betti_number", betti_number(p)},
           {"tree", tree}};
  if (tree) {
    out["note"] =
        "tree partition: an equipartition, when one exists, is unique and is the "
        "Courant-sharp critical point";
  }
  out["critical_points"] = std::move(list);
  write_text(cfg.out, dump_json(out));
  if (!cfg.dot.empty()) write_text(cfg.dot, partition_dot(p));
  return 0;
}

int cmd_verify(const Config& cfg) {
  SuiteOptions opts;
  opts.tol = cfg.tol;
  opts.vertex_cap = cfg.vertex_cap;
  opts.subset_cap = cfg.subset_cap;
  opts.jitter = cfg.jitter ? cfg.jitter_rel : 0.0;
  const SuiteResult r = run_suite(cfg.suite, seed_or_env(cfg, true), cfg.count, opts);
  write_text(cfg.out, dump_json(r.to_json()));
  if (!r.passed()) {
    std::cerr << dump_json(error_to_json(
        to_string(ErrorKind::SuiteFailed),
        std::to_string(r.failures()) + " check(s) failed in suite '" + cfg.suite + "'"));
    return 1;
  }
  return 0;
}

int cmd_enumerate_min(const Config& cfg) {
  const WeightedGraph g = load_graph(cfg);
  if (cfg.nu < 1 || cfg.nu > g.vertex_count()) {
    throw Error(ErrorKind::InvalidInput, "component count out of range");
  }
  const EnumerationMinimum em = enumerate_minimum(g, cfg.nu, minimize_options(cfg), cfg.vertex_cap);
  const Partition& best = em.partitions[em.best];
  Json j{{"nu", cfg.nu},
         {"partitions", em.partitions.size()},
         {"best_partition", partition_to_json(best)["labels"]},
         {"best_energy", em.estimates[em.best].energy},
         {"best_alpha", param_point_to_json(best, em.estimates[em.best].alpha)["alpha"]},
         {"lambda_nu", em.lambda_nu},
         {"courant_sharp", em.courant_sharp}};
  bool ok = true;
  if (em.nodal_partition) {
    const double nodal_energy = em.estimates[*em.nodal_partition].energy;
    const double slack = em.estimates[em.best].energy - em.lambda_nu;
    const bool attains = std::abs(nodal_energy - em.lambda_nu) <= 1e-8 && slack >= -1e-8;
    j["nodal_partition"] = partition_to_json(em.partitions[*em.nodal_partition])["labels"];
    j["nodal_energy"] = nodal_energy;
    j["nodal_attains_minimum"] = attains;
    ok = attains;
  }
  write_text(cfg.out, dump_json(j));
  if (!cfg.dot.empty()) write_text(cfg.dot, partition_dot(best));
  return ok ? 0 : 1;
}

int cmd_lower_bound(const Config& cfg) {
  const WeightedGraph g = load_graph(cfg);
  const Signature sigma = load_signature(cfg, g);
  const Partition p = partition_from_json(g, read_json_file(cfg.partition_file));
  const BoundReport r = lower_bound_check(sigma, p, minimize_options(cfg), cfg.subset_cap);
  Json j = bound_report_to_json(g, r);
  const MaxLowerBound best = maximize_lower_bound(p, cfg.subset_cap);
  j["max_lower_bound"] = Json{{"gamma", edge_list_json(g, best.gamma)},
                              {"value", best.value}};
  write_text(cfg.out, dump_json(j));
  if (!cfg.dot.empty()) write_text(cfg.dot, partition_dot(p));
  return r.slack >= -1e-9 ? 0 : 1;
}

int cmd_ghost_check(const Config& cfg) {
  const WeightedGraph g = load_graph(cfg);
  int checked = 0;
  if (!cfg.partition_file.empty()) {
    verify_discretization(partition_from_json(g, read_json_file(cfg.partition_file)));
    checked = 1;
  } else {
    for (int nu = 1; nu <= g.vertex_count(); ++nu) {
      for_each_partition(
          g, nu,
          [&](const Partition& p) {
            verify_discretization(p);
            ++checked;
          },
          cfg.vertex_cap);
    }
  }
  write_text(cfg.out, dump_json(Json{{"partitions_checked", checked}, {"passed", true}}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral minimal partitions of weighted graphs"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "64-bit seed (falls back to SPL_SEED)");
    sub->add_option("--tol-eq", cfg.tol.eq_tol, "equipartition tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-zero", cfg.tol.zero_tol, "relative zero threshold")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-gap", cfg.tol.gap_rel, "relative spectral gap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-hess", cfg.tol.hess_rel, "relative Hessian threshold")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-vertex", cfg.vertex_cap, "vertex cap for enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-subset", cfg.subset_cap, "boundary cap for subset searches")
        ->check(CLI::Range(1, 62));
    sub->add_flag("--jitter", cfg.jitter, "jitter edge weights with the seeded generator");
    sub->add_option("--jitter-rel", cfg.jitter_rel, "relative jitter magnitude")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output path (default stdout)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "eigenpairs of a signed Laplacian");
  spectrum->add_option("graph", cfg.graph_file)->required();
  spectrum->add_option("--signature", cfg.signature_file);
  common(spectrum);

  auto* nodal = app.add_subcommand("nodal", "strong nodal domains of an eigenvector");
  nodal->add_option("graph", cfg.graph_file)->required();
  nodal->add_option("--signature", cfg.signature_file);
  nodal->add_option("--index", cfg.index, "1-based eigen index");
  nodal->add_option("--vector", cfg.vector_file, "JSON file {\"vector\": [...]}");
  nodal->add_option("--dot", cfg.dot, "DOT output path");
  common(nodal);

  auto* critical = app.add_subcommand("critical", "critical equipartitions of a partition");
  critical->add_option("graph", cfg.graph_file)->required();
  critical->add_option("partition", cfg.partition_file)->required();
  critical->add_option("--dot", cfg.dot, "DOT output path");
  common(critical);

  auto* verify = app.add_subcommand("verify", "seeded property suites");
  verify->add_option("suite", cfg.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--count", cfg.count, "instances")->check(CLI::NonNegativeNumber);
  common(verify);

  auto* enum_min = app.add_subcommand("enumerate-min", "minimal nu-partition by enumeration");
  enum_min->add_option("graph", cfg.graph_file)->required();
  enum_min->add_option("--nu", cfg.nu, "component count");
  enum_min->add_option("--starts", cfg.starts, "random starts per partition")
      ->check(CLI::NonNegativeNumber);
  enum_min->add_option("--dot", cfg.dot, "DOT output path");
  common(enum_min);

  auto* lower = app.add_subcommand("lower-bound", "switching-class lower bound for a partition");
  lower->add_option("graph", cfg.graph_file)->required();
  lower->add_option("partition", cfg.partition_file)->required();
  lower->add_option("--signature", cfg.signature_file);
  lower->add_option("--starts", cfg.starts, "random starts")->check(CLI::NonNegativeNumber);
  lower->add_option("--dot", cfg.dot, "DOT output path");
  common(lower);

  auto* ghost = app.add_subcommand("ghost-check", "ghost-vertex discretization self-test");
  ghost->add_option("graph", cfg.graph_file)->required();
  ghost->add_option("--partition", cfg.partition_file);
  common(ghost);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << dump_json(error_to_json("InvalidInput", e.what()));
    return 2;
  }

  try {
    if (*spectrum) return cmd_spectrum(cfg);
    if (*nodal) return cmd_nodal(cfg);
    if (*critical) return cmd_critical(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*enum_min) return cmd_enumerate_min(cfg);
    if (*lower) return cmd_lower_bound(cfg);
    if (*ghost) return cmd_ghost_check(cfg);
  } catch (const Error& e) {
    std::cerr << dump_json(error_to_json(to_string(e.kind()), e.what()));
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << dump_json(error_to_json("InternalError", e.what()));
    return 1;
  }
  return 0;
}
