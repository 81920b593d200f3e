#include "deltaclust/validate.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <vector>


namespace deltaclust {

namespace {

void require_cover(std::span<const PlanePoint> points, const Clustering& c) {
  if (c.labels.size() != points.size()) {
    throw std::invalid_argument("labels cover " + std::to_string(c.labels.size()) +
                                " points but there are " + std::to_string(points.size()));
  }
}

}  // namespace

std::string AdmissibilityVerdict::describe() const {
  switch (failed) {
    case Criterion::none:
      return "admissible";
    case Criterion::separation_between:
      return "points " + std::to_string(first) + " and " + std::to_string(second) +
             " are in different clusters but only " + std::to_string(distance) + " apart";
    case Criterion::separation_within:
      return "point " + std::to_string(first) +
             " shares a cluster with other points but none within delta";
  }
  return "?";
}

AdmissibilityVerdict is_admissible(std::span<const PlanePoint> points, double delta,
                                   const Clustering& c) {
  require_positive_delta(delta);
  require_cover(points, c);
  const double delta_sq = delta * delta;
  const std::size_t n = points.size();

  std::vector<std::size_t> cluster_size(c.k + 1, 0);
  for (auto label : c.labels) {
    if (label >= cluster_size.size()) cluster_size.resize(label + 1, 0);
    ++cluster_size[label];
  }
  std::vector<bool> has_close_mate(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!within_delta(points[i], points[j], delta_sq)) continue;
      if (c.labels[i] != c.labels[j]) {
        return {false, Criterion::separation_between, i, j,
                std::sqrt(squared_distance(points[i], points[j]))};
      }
      has_close_mate[i] = has_close_mate[j] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cluster_size[c.labels[i]] > 1 && !has_close_mate[i]) {
      return {false, Criterion::separation_within, i, i, 0.0};
    }
  }
  return {};
}

AdmissibilityVerdict is_admissible(const Spectrum& s, double delta, const Clustering& c) {
  return is_admissible(s.points, delta, c);
}

Clustering oracle_components(std::span<const PlanePoint> points, double delta) {
  require_positive_delta(delta);
  const double delta_sq = delta * delta;
  const std::size_t n = points.size();
  std::vector<std::vector<std::size_t>> adjacent(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (within_delta(points[i], points[j], delta_sq)) {
        adjacent[i].push_back(j);
        adjacent[j].push_back(i);
      }
    }
  }
  Clustering out;
  out.labels.assign(n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t start = 0; start < n; ++start) {
    if (out.labels[start] != 0) continue;
    out.labels[start] = ++out.k;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const std::size_t w : adjacent[u]) {
        if (out.labels[w] == 0) {
          out.labels[w] = out.k;
          queue.push_back(w);
        }
      }
    }
  }
  return out;
}

Clustering oracle_components(const Spectrum& s, double delta) {
  return oracle_components(s.points, delta);
}

bool components_refine_admissible(std::span<const PlanePoint> points, double delta,
                                  const Clustering& c) {
  require_cover(points, c);
  const Clustering components = oracle_components(points, delta);
  std::vector<std::uint32_t> cluster_of_component(components.k + 1, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto& seen = cluster_of_component[components.labels[i]];
    if (seen == 0) {
      seen = c.labels[i];
    } else if (seen != c.labels[i]) {
      return false;
    }
  }
  return true;
}

bool components_refine_admissible(const Spectrum& s, double delta, const Clustering& c) {
  return components_refine_admissible(s.points, delta, c);
}

}  // namespace deltaclust
