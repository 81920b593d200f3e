// deltaclust: cluster points in the plane into delta-separated groups.
//
// Exit codes: 0 success, 1 labels admissible but coarser than the connected
// components (check), 2 malformed or missing input, 3 invalid flags or flag
// combination, 4 labels not admissible (check).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "deltaclust/cluster.hpp"
#include "deltaclust/genbench.hpp"
#include "deltaclust/io.hpp"
#include "deltaclust/spectrum.hpp"
#include "deltaclust/validate.hpp"
#include "deltaclust/version.hpp"

namespace {

using namespace deltaclust;

constexpr int kOk = 0;
constexpr int kCoarser = 1;
constexpr int kBadInput = 2;
constexpr int kBadFlags = 3;
constexpr int kInadmissible = 4;

struct ExitWith {
  int code;
  std::string message;
};

std::vector<PlanePoint> load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExitWith{kBadInput, "cannot open points file '" + path + "'"};
  try {
    return read_points(in);
  } catch (const ParseError& e) {
    throw ExitWith{kBadInput, path + ": " + e.what()};
  }
}

std::vector<std::uint32_t> load_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExitWith{kBadInput, "cannot open labels file '" + path + "'"};
  try {
    return read_labels(in);
  } catch (const ParseError& e) {
    throw ExitWith{kBadInput, path + ": " + e.what()};
  }
}

// Writes to the named file, or standard output for "" or "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ExitWith{kBadInput, "cannot write '" + path + "'"};
  fn(out);
}

struct ClusterArgs {
  std::string input;
  std::string output;
  double delta = 0.1;
  std::string algorithm = "delaunay";
  std::string dsu = "forest";
  std::string mode = "filtered";
  bool dedup = true;
  std::string perturb;
  bool merge_duplicates = false;
  bool conjugate_pairs = false;
  std::uint64_t seed = 0;
  CLI::Option* perturb_opt = nullptr;
};

int run_cluster(const ClusterArgs& a) {
  const auto raw = load_points(a.input);
  if (raw.empty()) throw ExitWith{kBadInput, a.input + ": no points"};

  ClusterOptions options;
  options.algorithm = parse_algorithm(a.algorithm);
  options.dsu = parse_dsu_kind(a.dsu);
  options.mode = parse_arithmetic_mode(a.mode);
  options.dedup = a.dedup;
  options.merge_duplicates = a.merge_duplicates;
  options.seed = a.seed;
  if (a.perturb_opt->count() > 0) {
    if (a.perturb.empty()) {
      options.perturb = default_perturbation(raw);
    } else {
      try {
        std::size_t used = 0;
        options.perturb = std::stod(a.perturb, &used);
        if (used != a.perturb.size()) throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        throw ExitWith{kBadFlags, "--perturb: '" + a.perturb + "' is not a number"};
      }
      if (!(*options.perturb >= 0)) throw ExitWith{kBadFlags, "--perturb must be nonnegative"};
    }
  }

  if (options.algorithm == Algorithm::real) {
    if (options.perturb) {
      throw ExitWith{kBadFlags, "--algorithm real cannot be combined with --perturb"};
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i].im != 0 && !a.conjugate_pairs) {
        throw ExitWith{kBadFlags, "--algorithm real needs real input, but line " +
                                      std::to_string(i + 1) + " has a nonzero imaginary part"};
      }
    }
  }

  const Spectrum s = a.conjugate_pairs ? reduce_conjugate_pairs(raw) : Spectrum::from_points(raw);
  if (options.algorithm == Algorithm::real) {
    for (const auto& p : s.points) {
      if (p.im != 0) {
        throw ExitWith{kBadFlags, "--algorithm real needs real input after conjugate reduction"};
      }
    }
  }

  Clustering c;
  try {
    c = cluster(s, a.delta, options);
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    if (what.find("duplicate") != std::string::npos) {
      throw ExitWith{kBadFlags, what + " (--no-dedup needs --perturb or --merge-duplicates)"};
    }
    throw ExitWith{kBadFlags, what};
  }
  with_output(a.output, [&](std::ostream& out) { write_labels(out, c); });
  std::cerr << "k=" << c.k << '\n';
  return kOk;
}

struct GenerateArgs {
  std::string dist = "circles";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t circles = 5;
  double spacing = 0.2;
  std::size_t origin_multiplicity = 1;
  double side = 0.04;
  double center_spacing = 0.15;
  std::size_t squares = 7;
  std::string output;
};

int run_generate(const GenerateArgs& a) {
  if (a.n == 0) throw ExitWith{kBadInput, "--n must be at least 1"};
  Spectrum s;
  try {
    if (a.dist == "circles") {
      s = gen_circles(a.n, a.circles, a.spacing, a.origin_multiplicity, a.seed);
    } else if (a.dist == "squares") {
      s = gen_squares(a.n, a.side, a.center_spacing, a.squares, a.seed);
    } else {
      s = generate(a.dist, a.n, a.seed);
    }
  } catch (const std::invalid_argument& e) {
    throw ExitWith{kBadInput, e.what()};
  }
  with_output(a.output, [&](std::ostream& out) { write_points(out, s.points); });
  return kOk;
}

struct BenchArgs {
  std::string plan;
  std::vector<std::string> algorithms;
  std::vector<std::string> modes{"filtered"};
  std::vector<std::string> dists;
  std::vector<std::size_t> sizes;
  std::size_t reps = 1;
  double timeout = 600;
  double delta = 0.1;
  std::uint64_t seed = 0;
  bool exponents = false;
  std::string output;
};

int run_bench_cmd(const BenchArgs& a) {
  std::vector<BenchPlanEntry> plan;
  if (!a.plan.empty()) {
    std::ifstream in(a.plan);
    if (!in) throw ExitWith{kBadInput, "cannot open plan file '" + a.plan + "'"};
    try {
      plan = parse_bench_plan(in);
    } catch (const std::invalid_argument& e) {
      throw ExitWith{kBadInput, a.plan + ": " + e.what()};
    }
  } else if (!a.algorithms.empty() && !a.dists.empty() && !a.sizes.empty()) {
    for (const auto& alg : a.algorithms) {
      for (const auto& mode : a.modes) {
        for (const auto& dist : a.dists) {
          for (const auto n : a.sizes) {
            plan.push_back({alg, parse_arithmetic_mode(mode), dist, n, a.reps});
          }
        }
      }
    }
  } else {
    throw ExitWith{kBadInput, "no bench plan: give --plan FILE or --algorithms, --dist and --sizes"};
  }
  if (plan.empty()) throw ExitWith{kBadInput, "bench plan is empty"};

  BenchSettings settings;
  settings.timeout_seconds = a.timeout;
  settings.delta = a.delta;
  settings.seed = a.seed;
  std::vector<BenchRecord> records;
  try {
    records = run_bench(plan, settings);
  } catch (const std::invalid_argument& e) {
    throw ExitWith{kBadInput, e.what()};
  }
  with_output(a.output, [&](std::ostream& out) { write_bench_csv(out, records); });
  if (a.exponents) {
    for (const auto& e : exponent_estimates(records)) {
      std::cerr << e.algorithm << ' ' << to_string(e.mode) << ' ' << e.distribution << " n="
                << e.n1 << ".." << e.n2 << " hmean=" << e.harmonic_mean
                << " exponent=" << e.exponent << '\n';
    }
  }
  return kOk;
}

struct CheckArgs {
  std::string points;
  std::string labels;
  double delta = 0.1;
};

int run_check(const CheckArgs& a) {
  const auto points = load_points(a.points);
  const auto labels = load_labels(a.labels);
  if (labels.size() != points.size()) {
    throw ExitWith{kBadInput, "labels file has " + std::to_string(labels.size()) +
                                  " labels for " + std::to_string(points.size()) + " points"};
  }
  const Clustering c = canonicalize(labels);
  const auto verdict = is_admissible(points, a.delta, c);
  if (!verdict.admissible) {
    std::cout << "inadmissible: " << verdict.describe() << '\n';
    return kInadmissible;
  }
  const Clustering components = oracle_components(points, a.delta);
  if (same_partition(c, components)) {
    std::cout << "admissible; equal to the connected components (k=" << c.k << ")\n";
    return kOk;
  }
  std::cout << "admissible but not minimal: " << c.k << " clusters where the delta-closeness "
            << "graph has " << components.k
            << " connected components; each cluster is a union of components\n";
  return kCoarser;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition points in the plane into minimal delta-separated clusters"};
  app.set_version_flag("--version", std::string(deltaclust::kVersion));
  app.require_subcommand(1);

  ClusterArgs ca;
  auto* cl = app.add_subcommand("cluster", "Cluster a CSV file of re,im points");
  cl->add_option("input", ca.input, "Points file, one 're,im' per line")->required();
  cl->add_option("-o,--output", ca.output, "Labels file (default: standard output)");
  cl->add_option("--delta", ca.delta, "Closeness threshold")->capture_default_str();
  cl->add_option("--algorithm", ca.algorithm)
      ->check(CLI::IsMember({"naive", "real", "delaunay"}))
      ->capture_default_str();
  cl->add_option("--dsu", ca.dsu)->check(CLI::IsMember({"labels", "forest"}))->capture_default_str();
  cl->add_option("--mode", ca.mode)
      ->check(CLI::IsMember({"float", "filtered", "exact"}))
      ->capture_default_str();
  cl->add_flag("--dedup,!--no-dedup", ca.dedup, "Collapse exactly equal points first (default on)");
  ca.perturb_opt = cl->add_option("--perturb", ca.perturb,
                                  "Perturb coordinates by up to MAG (default max|coord|*2^-26)")
                       ->expected(0, 1);
  cl->add_flag("--merge-duplicates", ca.merge_duplicates,
               "With --no-dedup, let the triangulation absorb coincident points");
  cl->add_flag("--conjugate-pairs", ca.conjugate_pairs,
               "Cluster one member of each conjugate pair and copy its label");
  cl->add_option("--seed", ca.seed)->capture_default_str();

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "Write a synthetic spectrum as CSV");
  gen->add_option("--dist", ga.dist, "circles, squares, uniform or real")
      ->check(CLI::IsMember({"circles", "squares", "uniform", "real"}))
      ->capture_default_str();
  gen->add_option("--n", ga.n, "Number of points")->required();
  gen->add_option("--seed", ga.seed)->capture_default_str();
  gen->add_option("--circles", ga.circles)->capture_default_str();
  gen->add_option("--spacing", ga.spacing, "Radius step between circles")->capture_default_str();
  gen->add_option("--origin-multiplicity", ga.origin_multiplicity)->capture_default_str();
  gen->add_option("--side", ga.side, "Square side")->capture_default_str();
  gen->add_option("--center-spacing", ga.center_spacing)->capture_default_str();
  gen->add_option("--squares", ga.squares)->capture_default_str();
  gen->add_option("output", ga.output, "Output CSV (default: standard output)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time the algorithms and write CSV records");
  bench->add_option("--plan", ba.plan, "Plan file: algorithm,mode,distribution,n,repetitions");
  bench->add_option("--algorithms", ba.algorithms)->delimiter(',');
  bench->add_option("--modes", ba.modes)->delimiter(',')->capture_default_str();
  bench->add_option("--dist", ba.dists)->delimiter(',');
  bench->add_option("--sizes", ba.sizes)->delimiter(',');
  bench->add_option("--reps", ba.reps)->capture_default_str();
  bench->add_option("--timeout", ba.timeout, "Seconds before a run is censored")
      ->capture_default_str();
  bench->add_option("--delta", ba.delta)->capture_default_str();
  bench->add_option("--seed", ba.seed)->capture_default_str();
  bench->add_flag("--exponents", ba.exponents, "Print scaling exponent estimates to stderr");
  bench->add_option("output", ba.output, "Output CSV (default: standard output)");

  CheckArgs ka;
  auto* check = app.add_subcommand("check", "Check labels for delta-admissibility and minimality");
  check->add_option("points", ka.points)->required();
  check->add_option("labels", ka.labels)->required();
  check->add_option("--delta", ka.delta)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadFlags;
  }

  try {
    if (*cl) return run_cluster(ca);
    if (*gen) return run_generate(ga);
    if (*bench) return run_bench_cmd(ba);
    if (*check) return run_check(ka);
  } catch (const ExitWith& e) {
    std::cerr << "deltaclust: " << e.message << '\n';
    return e.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "deltaclust: " << e.what() << '\n';
    return kBadFlags;
  }
  return kBadFlags;
}
