#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "deltaclust/spectrum.hpp"
#include "deltaclust/types.hpp"

namespace deltaclust {

// origin_multiplicity copies of 0, the rest spread evenly over circles of
// radii spacing, 2*spacing, ..., circles*spacing at uniform random angles.
Spectrum gen_circles(std::size_t n, std::size_t circles = 5, double spacing = 0.2,
                     std::size_t origin_multiplicity = 1, std::uint64_t seed = 0);

// Points spread evenly over `squares` axis-aligned squares of the given side,
// centred at (j * center_spacing, 0), uniform inside each square.
Spectrum gen_squares(std::size_t n, double side = 0.04, double center_spacing = 0.15,
                     std::size_t squares = 7, std::uint64_t seed = 0);

// Uniform in the unit square.
Spectrum gen_uniform(std::size_t n, std::uint64_t seed = 0);

// Uniform on [0, 1) with zero imaginary parts.
Spectrum gen_real(std::size_t n, std::uint64_t seed = 0);

// Distribution ids understood by the bench harness:
//   circles, circles-origin6 (origin multiplicity n/6), uniform, real,
//   squares (side 0.04), squares:<side>
Spectrum generate(const std::string& distribution, std::size_t n, std::uint64_t seed);

// Algorithm ids understood by the bench harness:
//   naive, naive-forest, real, delaunay, delaunay-nodedup (dedup off,
//   duplicates merged in the triangulation), delaunay-perturb (perturbation
//   by max|coord| * 2^-26 instead of dedup)
Clustering run_algorithm(const std::string& algorithm, ArithmeticMode mode,
                         const Spectrum& s, double delta, std::uint64_t seed,
                         std::optional<Deadline> deadline = std::nullopt);

struct BenchPlanEntry {
  std::string algorithm;
  ArithmeticMode mode = ArithmeticMode::filtered;
  std::string distribution;
  std::size_t n = 0;
  std::size_t repetitions = 1;
};

struct BenchRecord {
  std::string algorithm;
  ArithmeticMode mode = ArithmeticMode::filtered;
  std::string distribution;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t rep = 0;
  double seconds = 0.0;  // meaningless when censored
  std::uint32_t k = 0;
  bool censored = false;
};

struct BenchSettings {
  double timeout_seconds = 600.0;
  double delta = 0.1;
  std::uint64_t seed = 0;  // repetition r uses seed + r
};

// Times each configuration single-threaded; generation is not timed. A run
// past the timeout is censored, and so is every larger n of the same
// (algorithm, mode, distribution) series.
std::vector<BenchRecord> run_bench(const std::vector<BenchPlanEntry>& plan,
                                   const BenchSettings& settings = {});

struct ExponentEstimate {
  std::string algorithm;
  ArithmeticMode mode = ArithmeticMode::filtered;
  std::string distribution;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double harmonic_mean = 0.0;
  double exponent = 0.0;
};

// log(t2 / t1) / log(n2 / n1); throws std::invalid_argument when n1 == n2.
double scaling_exponent(double n1, double t1, double n2, double t2);
double harmonic_mean(double n1, double n2);

// Per series, the minimum time over repetitions at each n, then one estimate
// per consecutive pair of sizes. Censored records are ignored.
std::vector<ExponentEstimate> exponent_estimates(const std::vector<BenchRecord>& records);

// CSV with header algorithm,mode,distribution,n,seed,rep,seconds,k,censored.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

// Plan lines "algorithm,mode,distribution,n,repetitions"; blank lines,
// '#' comments and a leading header line are skipped. Throws
// std::invalid_argument naming the offending line.
std::vector<BenchPlanEntry> parse_bench_plan(std::istream& in);

}  // namespace deltaclust
