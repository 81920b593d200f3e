#include "deltaclust/naive_cluster.hpp"

#include <cmath>
#include <stdexcept>

#include "deltaclust/dsu.hpp"

namespace deltaclust {

NaiveResult cluster_points_naive(std::span<const PlanePoint> points, double delta,
                                 const NaiveOptions& options) {
  require_positive_delta(delta);
  if (points.empty()) throw std::invalid_argument("cannot cluster an empty spectrum");
  const double delta_sq = delta * delta;
  const std::size_t n = points.size();

  return with_dsu(options.dsu, n, [&](auto& dsu) {
    NaiveResult result;
    for (std::size_t i = 0; i < n; ++i) {
      poll(options.deadline);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (options.skip_same_cluster && dsu.find(i) == dsu.find(j)) continue;
        ++result.distance_evaluations;
        if (within_delta(points[i], points[j], delta_sq)) dsu.unite(i, j);
      }
    }
    result.clustering = dsu.partition();
    return result;
  });
}

Clustering cluster_naive(const Spectrum& s, double delta, DsuKind dsu) {
  NaiveOptions options;
  options.dsu = dsu;
  return broadcast_labels(cluster_points_naive(s.points, delta, options).clustering, s);
}

std::uint64_t count_distance_evaluations(const Spectrum& s, double delta, bool skip_same_cluster,
                                         DsuKind dsu) {
  NaiveOptions options;
  options.dsu = dsu;
  options.skip_same_cluster = skip_same_cluster;
  return cluster_points_naive(s.points, delta, options).distance_evaluations;
}

}  // namespace deltaclust
