// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <initializer_list>
#include <iostream>
#include <map>
#include <string>

#include "spl/critical.hpp"
#include "spl/verify.hpp"

namespace {

using namespace spl;

constexpr std::uint64_t kSeed = 20240601;

class Runner {
 public:
  const SuiteResult& suite(const std::string& name, int count) {
    const std::string key = name + "/" + std::to_string(count);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, run_suite(name, kSeed, count)).first;
    return it->second;
  }

 private:
  std::map<std::string, SuiteResult> cache_;
};

// Every listed check must have at least one pass and no failures, and the
// suite must not have thrown on any instance.
bool checks_hold(const SuiteResult& r, std::initializer_list<const char*> names, std::string& why) {
  for (const CheckRecord* rec : r.named("no-unexpected-error")) {
    if (rec->status == CheckStatus::Fail) {
      why = "instance " + std::to_string(rec->instance) + " threw " + rec->detail.dump();
      return false;
    }
  }
  for (const char* name : names) {
    int pass = 0;
    for (const CheckRecord* rec : r.named(name)) {
      if (rec->status == CheckStatus::Fail) {
        why = std::string(name) + " failed on instance " + std::to_string(rec->instance) + ": " +
              rec->detail.dump();
        return false;
      }
      pass += rec->status == CheckStatus::Pass;
    }
    if (pass == 0) {
      why = std::string(name) + " never ran";
      return false;
    }
  }
  why = std::to_string(r.passes()) + " passes, " + std::to_string(r.skips()) + " skips";
  return true;
}

bool triangle_canonical(std::string& why) {
  const WeightedGraph g = WeightedGraph::build(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const Partition p = make_partition(g, {0, 1, 2});
  const auto points = critical_points_from_spectrum(p);
  if (points.size() != 1) {
    why = "triangle has " + std::to_string(points.size()) + " critical points";
    return false;
  }
  const MorseResult m = morse_index(p, points[0]);
  why = "triangle deficiency " + std::to_string(points[0].deficiency) + ", Morse index " +
        std::to_string(m.index) + ", energy " + std::to_string(points[0].energy);
  return points[0].deficiency == 0 && m.index == 0 && std::abs(points[0].energy - 4.0) < 1e-9;
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

bool deterministic(std::string& why) {
  const std::string cmd = std::string(SPL_CLI_PATH) + " verify correspondence --seed 99 --count 20";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  why = std::to_string(a.size()) + " bytes, exit " + std::to_string(s1) + "/" + std::to_string(s2);
  return s1 == 0 && s2 == 0 && !a.empty() && a == b;
}

}  // namespace

int main() {
  Runner run;
  int failed = 0;
  int number = 0;
  auto report = [&](const std::string& title, auto&& body) {
    ++number;
    std::string why;
    bool ok = false;
    try {
      ok = body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << number << " " << title << " (" << why << ")"
              << std::endl;
  };

  report("courant bound", [&](std::string& w) {
    return checks_hold(run.suite("courant", 100), {"courant-bound"}, w);
  });
  report("switching invariance", [&](std::string& w) {
    return checks_hold(run.suite("courant", 100), {"switching-invariance", "balanced-ground-state"},
                       w);
  });
  report("weyl interlacing", [&](std::string& w) {
    return checks_hold(run.suite("interlacing", 200), {"weyl-interlacing"}, w);
  });
  report("critical points on the edge curve", [&](std::string& w) {
    return checks_hold(run.suite("shift", 50), {"branch-residual", "base-eigenvector"}, w);
  });
  report("spectral shift", [&](std::string& w) {
    return checks_hold(run.suite("shift", 50), {"spectral-shift"}, w);
  });
  report("equipartition from eigenvector", [&](std::string& w) {
    return checks_hold(run.suite("correspondence", 50),
                       {"equipartition-from-eigenvector", "eigenvector-is-critical",
                        "lagrange-certificate"},
                       w);
  });
  report("transversality", [&](std::string& w) {
    return checks_hold(run.suite("correspondence", 50), {"transversality"}, w);
  });
  report("jacobian", [&](std::string& w) {
    return checks_hold(run.suite("correspondence", 50), {"jacobian-finite-difference"}, w);
  });
  report("tree uniqueness", [&](std::string& w) {
    return checks_hold(run.suite("tree-unique", 50), {"tree-uniqueness"}, w);
  });
  report("morse index equals deficiency", [&](std::string& w) {
    std::string tri;
    if (!triangle_canonical(tri)) {
      w = tri;
      return false;
    }
    const bool ok = checks_hold(run.suite("morse", 20),
                                {"morse-equals-deficiency", "restoration-prediction"}, w);
    w = tri + "; " + w;
    return ok;
  });
  report("lower bound", [&](std::string& w) {
    return checks_hold(run.suite("lower-bound", 100), {"lower-bound", "nodal-class"}, w);
  });
  report("global minimality", [&](std::string& w) {
    return checks_hold(run.suite("lower-bound", 100), {"global-minimality"}, w);
  });
  report("homology", [&](std::string& w) {
    return checks_hold(run.suite("homology", 200),
                       {"homology-vs-switching", "cut-space-bipartite", "membership-agreement",
                        "chain-decomposition"},
                       w);
  });
  report("ghost discretization", [&](std::string& w) {
    return checks_hold(run.suite("ghost", 20), {"reduced-operator", "anticontinuity", "pullback-eigenpairs"}, w);
  });
  report("determinism", deterministic);

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
