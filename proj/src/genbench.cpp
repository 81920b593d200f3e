#include "deltaclust/genbench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "deltaclust/cluster.hpp"

namespace deltaclust {

namespace {

void require_count(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Spectrum gen_circles(std::size_t n, std::size_t circles, double spacing,
                     std::size_t origin_multiplicity, std::uint64_t seed) {
  require_count(n, "n");
  require_count(circles, "circles");
  if (!(spacing > 0) || !std::isfinite(spacing)) {
    throw std::invalid_argument("circle spacing must be positive");
  }
  if (origin_multiplicity > n) throw std::invalid_argument("origin multiplicity exceeds n");

  std::mt19937_64 rng(seed);
  std::vector<PlanePoint> points(origin_multiplicity, PlanePoint{0.0, 0.0});
  points.reserve(n);
  for (std::size_t i = 0; points.size() < n; ++i) {
    const double radius = spacing * static_cast<double>(i % circles + 1);
    const double angle = 2.0 * std::numbers::pi * unit_interval(rng());
    points.push_back({radius * std::cos(angle), radius * std::sin(angle)});
  }
  return Spectrum::from_points(points);
}

Spectrum gen_squares(std::size_t n, double side, double center_spacing, std::size_t squares,
                     std::uint64_t seed) {
  require_count(n, "n");
  require_count(squares, "squares");
  if (!(side > 0) || !std::isfinite(side)) throw std::invalid_argument("side must be positive");
  if (!(center_spacing > 0) || !std::isfinite(center_spacing)) {
    throw std::invalid_argument("center spacing must be positive");
  }
  std::mt19937_64 rng(seed);
  std::vector<PlanePoint> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double cx = center_spacing * static_cast<double>(i % squares);
    const double x = cx + side * (unit_interval(rng()) - 0.5);
    const double y = side * (unit_interval(rng()) - 0.5);
    points.push_back({x, y});
  }
  return Spectrum::from_points(points);
}

Spectrum gen_uniform(std::size_t n, std::uint64_t seed) {
  require_count(n, "n");
  std::mt19937_64 rng(seed);
  std::vector<PlanePoint> points(n);
  for (auto& p : points) {
    p.re = unit_interval(rng());
    p.im = unit_interval(rng());
  }
  return Spectrum::from_points(points);
}

Spectrum gen_real(std::size_t n, std::uint64_t seed) {
  require_count(n, "n");
  std::mt19937_64 rng(seed);
  std::vector<PlanePoint> points(n);
  for (auto& p : points) p.re = unit_interval(rng());
  return Spectrum::from_points(points);
}

Spectrum generate(const std::string& distribution, std::size_t n, std::uint64_t seed) {
  if (distribution == "circles") return gen_circles(n, 5, 0.2, 1, seed);
  if (distribution == "circles-origin6") return gen_circles(n, 5, 0.2, std::max<std::size_t>(1, n / 6), seed);
  if (distribution == "uniform") return gen_uniform(n, seed);
  if (distribution == "real") return gen_real(n, seed);
  if (distribution == "squares") return gen_squares(n, 0.04, 0.15, 7, seed);
  if (distribution.rfind("squares:", 0) == 0) {
    const std::string side = distribution.substr(8);
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(side, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != side.size() || used == 0) {
      throw std::invalid_argument("bad square side in distribution '" + distribution + "'");
    }
    return gen_squares(n, value, 0.15, 7, seed);
  }
  throw std::invalid_argument("unknown distribution '" + distribution + "'");
}

Clustering run_algorithm(const std::string& algorithm, ArithmeticMode mode, const Spectrum& s,
                         double delta, std::uint64_t seed, std::optional<Deadline> deadline) {
  ClusterOptions options;
  options.mode = mode;
  options.seed = seed;
  options.deadline = deadline;
  if (algorithm == "naive") {
    options.algorithm = Algorithm::naive;
    options.dsu = DsuKind::labels;
  } else if (algorithm == "naive-forest") {
    options.algorithm = Algorithm::naive;
    options.dsu = DsuKind::forest;
  } else if (algorithm == "real") {
    options.algorithm = Algorithm::real;
  } else if (algorithm == "delaunay") {
    options.algorithm = Algorithm::delaunay;
  } else if (algorithm == "delaunay-nodedup") {
    options.algorithm = Algorithm::delaunay;
    options.dedup = false;
    options.merge_duplicates = true;
  } else if (algorithm == "delaunay-perturb") {
    options.algorithm = Algorithm::delaunay;
    options.dedup = false;
    options.perturb = default_perturbation(s.points);
  } else {
    throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
  }
  if (options.algorithm == Algorithm::naive) options.dedup = false;
  return cluster(s, delta, options);
}

std::vector<BenchRecord> run_bench(const std::vector<BenchPlanEntry>& plan,
                                   const BenchSettings& settings) {
  using Series = std::tuple<std::string, ArithmeticMode, std::string>;
  std::map<Series, std::size_t> censored_at;  // smallest censored n per series
  std::vector<BenchRecord> records;

  for (const auto& entry : plan) {
    const Series series{entry.algorithm, entry.mode, entry.distribution};
    for (std::size_t rep = 0; rep < entry.repetitions; ++rep) {
      BenchRecord r;
      r.algorithm = entry.algorithm;
      r.mode = entry.mode;
      r.distribution = entry.distribution;
      r.n = entry.n;
      r.seed = settings.seed + rep;
      r.rep = rep;

      const auto it = censored_at.find(series);
      if (it != censored_at.end() && it->second <= entry.n) {
        r.censored = true;
        records.push_back(r);
        continue;
      }
      const Spectrum s = generate(entry.distribution, entry.n, r.seed);
      const auto deadline =
          Deadline::after(std::chrono::duration<double>(settings.timeout_seconds));
      const auto start = std::chrono::steady_clock::now();
      try {
        const Clustering c =
            run_algorithm(entry.algorithm, entry.mode, s, settings.delta, r.seed, deadline);
        const auto stop = std::chrono::steady_clock::now();
        r.seconds = std::max(std::chrono::duration<double>(stop - start).count(), 1e-9);
        r.k = c.k;
        if (r.seconds > settings.timeout_seconds) r.censored = true;
      } catch (const Cancelled&) {
        r.censored = true;
      }
      if (r.censored) {
        auto& smallest = censored_at.try_emplace(series, entry.n).first->second;
        smallest = std::min(smallest, entry.n);
      }
      records.push_back(r);
    }
  }
  return records;
}

double scaling_exponent(double n1, double t1, double n2, double t2) {
  if (n1 == n2) throw std::invalid_argument("scaling exponent needs two distinct sizes");
  return std::log(t2 / t1) / std::log(n2 / n1);
}

double harmonic_mean(double n1, double n2) { return 1.0 / ((1.0 / n1 + 1.0 / n2) / 2.0); }

std::vector<ExponentEstimate> exponent_estimates(const std::vector<BenchRecord>& records) {
  using Series = std::tuple<std::string, ArithmeticMode, std::string>;
  std::map<Series, std::map<std::size_t, double>> best;
  for (const auto& r : records) {
    if (r.censored) continue;
    auto& by_n = best[{r.algorithm, r.mode, r.distribution}];
    auto [it, inserted] = by_n.try_emplace(r.n, r.seconds);
    if (!inserted) it->second = std::min(it->second, r.seconds);
  }
  std::vector<ExponentEstimate> out;
  for (const auto& [series, by_n] : best) {
    for (auto it = by_n.begin(); it != by_n.end() && std::next(it) != by_n.end(); ++it) {
      const auto nxt = std::next(it);
      ExponentEstimate e;
      std::tie(e.algorithm, e.mode, e.distribution) = series;
      e.n1 = it->first;
      e.n2 = nxt->first;
      e.harmonic_mean = harmonic_mean(static_cast<double>(e.n1), static_cast<double>(e.n2));
      e.exponent = scaling_exponent(static_cast<double>(e.n1), it->second,
                                    static_cast<double>(e.n2), nxt->second);
      out.push_back(e);
    }
  }
  return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "algorithm,mode,distribution,n,seed,rep,seconds,k,censored\n";
  for (const auto& r : records) {
    out << r.algorithm << ',' << to_string(r.mode) << ',' << r.distribution << ',' << r.n << ','
        << r.seed << ',' << r.rep << ',';
    if (!r.censored) {
      std::ostringstream seconds;
      seconds.precision(9);
      seconds << r.seconds;
      out << seconds.str() << ',' << r.k;
    } else {
      out << ',';
    }
    out << ',' << (r.censored ? 1 : 0) << '\n';
  }
}

std::vector<BenchPlanEntry> parse_bench_plan(std::istream& in) {
  std::vector<BenchPlanEntry> plan;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (plan.empty() && line.rfind("algorithm", 0) == 0) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("plan line " + std::to_string(line_no) + ": " + why);
    };
    if (fields.size() != 5) fail("expected algorithm,mode,distribution,n,repetitions");
    BenchPlanEntry e;
    e.algorithm = fields[0];
    try {
      e.mode = parse_arithmetic_mode(fields[1]);
      std::size_t used = 0;
      const long long n = std::stoll(fields[3], &used);
      if (used != fields[3].size() || n < 1) fail("n must be a positive integer");
      e.n = static_cast<std::size_t>(n);
      const long long reps = std::stoll(fields[4], &used);
      if (used != fields[4].size() || reps < 1) fail("repetitions must be a positive integer");
      e.repetitions = static_cast<std::size_t>(reps);
    } catch (const std::invalid_argument& err) {
      if (std::string(err.what()).rfind("plan line", 0) == 0) throw;
      fail(err.what());
    } catch (const std::out_of_range&) {
      fail("number out of range");
    }
    e.distribution = fields[2];
    plan.push_back(e);
  }
  return plan;
}

}  // namespace deltaclust
