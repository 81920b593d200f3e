#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "deltaclust/spectrum.hpp"
#include "deltaclust/types.hpp"

namespace deltaclust {

struct NaiveOptions {
  DsuKind dsu = DsuKind::labels;
  // Skip j when it already shares i's cluster (the Davies-Higham loop).
  bool skip_same_cluster = true;
  std::optional<Deadline> deadline;
};

struct NaiveResult {
  Clustering clustering;
  std::uint64_t distance_evaluations = 0;
};

// All-pairs clustering: for every i and every j > i not already in i's
// cluster, merge when |p_i - p_j| <= delta. Labels are over the points.
NaiveResult cluster_points_naive(std::span<const PlanePoint> points, double delta,
                                 const NaiveOptions& options = {});

// Clusters s.points and broadcasts the labels to every raw input position.
Clustering cluster_naive(const Spectrum& s, double delta, DsuKind dsu = DsuKind::labels);

std::uint64_t count_distance_evaluations(const Spectrum& s, double delta,
                                         bool skip_same_cluster = true,
                                         DsuKind dsu = DsuKind::labels);

}  // namespace deltaclust
