#include "deltaclust/real_cluster.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>


namespace deltaclust {

std::vector<std::uint32_t> prefix_sum(std::span<const std::uint8_t> gaps) {
  if (gaps.empty() || gaps.front() != 1) {
    throw std::invalid_argument("gap vector must be nonempty and start with 1");
  }
  std::vector<std::uint32_t> labels(gaps.size());
  std::uint32_t running = 0;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    running += gaps[i];
    labels[i] = running;
  }
  return labels;
}

Clustering cluster_points_real(std::span<const PlanePoint> points, double delta) {
  require_positive_delta(delta);
  if (points.empty()) throw std::invalid_argument("cannot cluster an empty spectrum");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].im != 0) {
      throw std::invalid_argument("point " + std::to_string(i) +
                                  " has a nonzero imaginary part; sort-and-split needs real input");
    }
  }

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a].re < points[b].re; });

  const double delta_sq = delta * delta;
  GapVector gaps(points.size());
  gaps[0] = 1;
  for (std::size_t i = 1; i < order.size(); ++i) {
    gaps[i] = within_delta(points[order[i]], points[order[i - 1]], delta_sq) ? 0 : 1;
  }
  const auto sorted_labels = prefix_sum(gaps);

  std::vector<std::uint32_t> labels(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) labels[order[i]] = sorted_labels[i];
  return canonicalize(labels);
}

Clustering cluster_real(const Spectrum& s, double delta) {
  return broadcast_labels(cluster_points_real(s.points, delta), s);
}

}  // namespace deltaclust
