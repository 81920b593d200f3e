#pragma once

#include <cstdint>
#include <optional>

#include "deltaclust/delaunay.hpp"
#include "deltaclust/spectrum.hpp"
#include "deltaclust/types.hpp"

namespace deltaclust {

struct DelaunayClusterOptions {
  std::uint64_t seed = 0;
  DsuKind dsu = DsuKind::forest;
  ArithmeticMode mode = ArithmeticMode::filtered;
  bool dedup = true;
  // Displace every point by up to this much per coordinate before clustering.
  std::optional<double> perturb;
  // With dedup off, let the triangulation absorb coincident points instead of
  // failing (reproduces the quadratic cost of high-multiplicity eigenvalues).
  bool merge_duplicates = false;
  std::optional<Deadline> deadline;
};

struct DelaunayClusterResult {
  Clustering clustering;  // over raw input positions
  std::size_t triangulation_edges = 0;
  std::size_t kept_edges = 0;
  PredicateStats predicate_stats;
};

// Triangulate, drop edges longer than delta, union the endpoints of the rest.
// Throws std::invalid_argument for delta <= 0, an empty spectrum, or
// coincident points when neither dedup, perturbation nor merging is enabled.
DelaunayClusterResult cluster_delaunay_detailed(const Spectrum& s, double delta,
                                                const DelaunayClusterOptions& options = {});

Clustering cluster_delaunay(const Spectrum& s, double delta,
                            const DelaunayClusterOptions& options = {});

// Number of Delaunay edges of length <= delta.
std::size_t pruned_edge_count(const Spectrum& s, double delta, std::uint64_t seed = 0);

}  // namespace deltaclust
