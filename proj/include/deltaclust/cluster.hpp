#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "deltaclust/spectrum.hpp"
#include "deltaclust/types.hpp"

namespace deltaclust {

enum class Algorithm { naive, real, delaunay };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& s);

// Everything the front ends can choose; defaults follow the CLI.
struct ClusterOptions {
  Algorithm algorithm = Algorithm::delaunay;
  DsuKind dsu = DsuKind::forest;
  ArithmeticMode mode = ArithmeticMode::filtered;
  bool dedup = true;
  std::optional<double> perturb;
  bool merge_duplicates = false;
  std::uint64_t seed = 0;
  std::optional<Deadline> deadline;
};

// Optional perturbation, optional deduplication, then the chosen algorithm;
// labels come back over the raw input positions of s.
Clustering cluster(const Spectrum& s, double delta, const ClusterOptions& options = {});

}  // namespace deltaclust
